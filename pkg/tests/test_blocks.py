import pytest

from availkit import (
    Bridge,
    Component,
    Edge,
    KofN,
    Leaf,
    Model,
    Network,
    Parallel,
    Series,
    leaves,
    validate,
)


def comps(*ids):
    return {cid: Component.direct(cid, 0.9) for cid in ids}


class TestLeaves:
    def test_depth_first_order(self):
        tree = Series(
            (
                Leaf("a"),
                Parallel((Leaf("b"), Leaf("c"))),
                KofN(2, (Leaf("d"), Leaf("e"), Leaf("f"))),
            )
        )
        assert leaves(tree) == ["a", "b", "c", "d", "e", "f"]

    def test_duplicates_are_kept(self):
        tree = Parallel((Leaf("a"), Leaf("a")))
        assert leaves(tree) == ["a", "a"]

    def test_bridge_order(self):
        tree = Bridge(Leaf("1"), Leaf("2"), Leaf("3"), Leaf("4"), Leaf("5"))
        assert leaves(tree) == ["1", "2", "3", "4", "5"]

    def test_rejects_non_block(self):
        with pytest.raises(TypeError):
            leaves("not a block")


class TestValidateBlocks:
    def test_clean_model(self):
        m = Model(comps("a", "b"), Series((Leaf("a"), Leaf("b"))))
        assert validate(m) == []

    def test_unknown_component_with_path(self):
        m = Model(comps("a"), Series((Leaf("a"), Leaf("ghost"))))
        diags = validate(m)
        assert len(diags) == 1
        assert diags[0].severity == "error"
        assert diags[0].path == "system.children[1]"
        assert "ghost" in diags[0].message

    def test_kofn_bounds(self):
        m = Model(comps("a", "b"), KofN(3, (Leaf("a"), Leaf("b"))))
        [diag] = validate(m)
        assert diag.severity == "error"
        assert "k=3" in diag.message

        m = Model(comps("a", "b"), KofN(0, (Leaf("a"), Leaf("b"))))
        [diag] = validate(m)
        assert "k must be >= 1" in diag.message

    def test_empty_children(self):
        m = Model(comps(), Series(()))
        assert any("no children" in d.message for d in validate(m))

    def test_bridge_paths(self):
        m = Model(
            comps("1", "2", "3", "4"),
            Bridge(Leaf("1"), Leaf("2"), Leaf("3"), Leaf("4"), Leaf("nope")),
        )
        [diag] = validate(m)
        assert diag.path == "system.b5"

    def test_unused_component_warning(self):
        m = Model(comps("a", "b", "z"), Series((Leaf("a"), Leaf("b"))))
        [diag] = validate(m)
        assert diag.severity == "warning"
        assert diag.path == "components.z"
        assert "never used" in diag.message


class TestValidateNetworks:
    def bridge_net(self):
        edges = (
            Edge("e0", "n1", "n2", "c1"),
            Edge("e1", "n1", "n3", "c2"),
            Edge("e2", "n2", "n3", "c3"),
            Edge("e3", "n2", "n4", "c4"),
            Edge("e4", "n3", "n4", "c5"),
        )
        return Network(edges=edges, source="n1", terminal="n4")

    def test_clean_network(self):
        m = Model(comps("c1", "c2", "c3", "c4", "c5"), self.bridge_net())
        assert validate(m) == []

    def test_source_equals_terminal(self):
        net = Network(edges=(Edge("e0", "a", "b", "c1"),), source="a", terminal="a")
        m = Model(comps("c1"), net)
        assert any("must differ" in d.message for d in validate(m))

    def test_duplicate_edge_ids(self):
        net = Network(
            edges=(Edge("e0", "a", "b", "c1"), Edge("e0", "a", "b", "c1")),
            source="a",
            terminal="b",
        )
        m = Model(comps("c1"), net)
        assert any("duplicate edge id" in d.message for d in validate(m))

    def test_self_loop_warns(self):
        net = Network(
            edges=(Edge("e0", "a", "b", "c1"), Edge("e1", "a", "a", "c1")),
            source="a",
            terminal="b",
        )
        m = Model(comps("c1"), net)
        [diag] = validate(m)
        assert diag.severity == "warning"
        assert "self-loop" in diag.message

    def test_unreachable_terminal_warns(self):
        net = Network(
            edges=(Edge("e0", "a", "b", "c1"),),
            source="a",
            terminal="t",
            nodes=frozenset({"a", "b", "t"}),
        )
        m = Model(comps("c1"), net)
        [diag] = validate(m)
        assert diag.severity == "warning"
        assert "unreachable" in diag.message

    def test_unknown_edge_component(self):
        net = Network(edges=(Edge("e0", "a", "b", "ghost"),), source="a", terminal="b")
        m = Model(comps("c1"), net)
        diags = validate(m)
        assert any(
            d.path == "system.edges[0]" and "ghost" in d.message for d in diags
        )
