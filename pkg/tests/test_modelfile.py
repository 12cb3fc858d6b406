import random
from pathlib import Path

from availkit import (
    Bridge,
    Component,
    KofN,
    Model,
    MtbfMaintainability,
    MtbfMdt,
    Network,
    Parallel,
    Series,
    format_model,
    parse_model,
    validate,
)
from conftest import random_tree

DATA = Path(__file__).parent / "data"


def errors(diags):
    return [d for d in diags if d.severity == "error"]


class TestParsing:
    def test_bridge_fixture(self):
        model, diags = parse_model((DATA / "bridge.avail").read_text())
        assert diags == []
        assert isinstance(model.system, Bridge)
        assert sorted(model.components) == ["c1", "c2", "c3", "c4", "c5"]
        assert validate(model) == []

    def test_all_three_component_forms(self):
        model, diags = parse_model(
            "component a { availability = 0.95 }\n"
            "component b { mtbf_h = 1000, mdt_h = 10 }\n"
            "component c { mtbf_h = 100000, mttres_h = 2, mldt_h = 4,\n"
            "              madt_h = 1, pnrs = 0.99, tat_h = 168 }\n"
            "system = series(a, b, c)\n"
        )
        assert diags == []
        assert isinstance(model.components["b"].spec, MtbfMdt)
        assert isinstance(model.components["c"].spec, MtbfMaintainability)

    def test_nested_blocks(self):
        model, diags = parse_model(
            "component x { availability = 0.9 }\n"
            "system = parallel(series(x, x), kofn(2; x, x, x))\n"
        )
        assert diags == []
        assert isinstance(model.system, Parallel)
        assert isinstance(model.system.children[0], Series)
        assert isinstance(model.system.children[1], KofN)
        assert model.system.children[1].k == 2

    def test_comments_and_whitespace(self):
        model, diags = parse_model(
            "# leading comment\n"
            "component x { availability = 0.9 }  # trailing\n"
            "\n\n"
            "system = x # done\n"
        )
        assert diags == []
        assert model is not None

    def test_scientific_notation(self):
        model, diags = parse_model(
            "component x { mtbf_h = 1e5, mdt_h = 8.68 }\nsystem = x\n"
        )
        assert diags == []
        assert model.components["x"].spec.mtbf_h == 1e5

    def test_network_declaration(self):
        model, diags = parse_model(
            "component link { availability = 0.99 }\n"
            "network {\n"
            "  source = a,\n"
            "  terminal = d,\n"
            "  edge(a, b, link),\n"
            "  edge(b, d, link)\n"
            "}\n"
        )
        assert diags == []
        assert isinstance(model.system, Network)
        assert model.system.source == "a"
        assert [e.id for e in model.system.edges] == ["e0", "e1"]
        assert model.system.edges[0].component_id == "link"


class TestDiagnostics:
    def test_out_of_range_availability_points_at_value(self):
        model, diags = parse_model("component c1 { availability = 1.5 }\nsystem = c1")
        assert model is None
        [d] = errors(diags)
        assert d.span.line == 1
        assert d.span.column == 31
        assert "out of [0, 1]" in d.message

    def test_missing_system(self):
        model, diags = parse_model("component c1 { availability = 0.9 }")
        assert model is None
        assert any("missing system" in d.message for d in errors(diags))

    def test_both_system_and_network(self):
        model, diags = parse_model(
            "component c1 { availability = 0.9 }\n"
            "system = c1\n"
            "network { source = a, terminal = b, edge(a, b, c1) }\n"
        )
        assert model is None
        assert any("not both" in d.message for d in errors(diags))

    def test_broken_system_is_not_missing(self):
        _, diags = parse_model(
            "component c1 { availability = 0.9 }\nsystem = series(c1)"
        )
        msgs = [d.message for d in errors(diags)]
        assert any("at least two" in m for m in msgs)
        assert not any("missing system" in m for m in msgs)

    def test_duplicate_component(self):
        _, diags = parse_model(
            "component c1 { availability = 0.9 }\n"
            "component c1 { availability = 0.8 }\n"
            "system = c1"
        )
        assert any("duplicate component id" in d.message for d in errors(diags))

    def test_duplicate_field(self):
        _, diags = parse_model(
            "component c1 { availability = 0.9, availability = 0.8 }\nsystem = c1"
        )
        assert any("duplicate field" in d.message for d in errors(diags))

    def test_unknown_field(self):
        _, diags = parse_model("component c1 { bogus = 1 }\nsystem = c1")
        assert any("unknown field 'bogus'" in d.message for d in errors(diags))

    def test_incomplete_field_combination(self):
        _, diags = parse_model("component c1 { mtbf_h = 100 }\nsystem = c1")
        assert any("component fields must be" in d.message for d in errors(diags))

    def test_mixed_field_combination(self):
        _, diags = parse_model(
            "component c1 { availability = 0.9, mtbf_h = 5 }\nsystem = c1"
        )
        assert any("component fields must be" in d.message for d in errors(diags))

    def test_kofn_k_bounds(self):
        _, diags = parse_model(
            "component c { availability = 0.9 }\nsystem = kofn(0; c, c)"
        )
        assert any("k must be >= 1" in d.message for d in errors(diags))
        _, diags = parse_model(
            "component c { availability = 0.9 }\nsystem = kofn(3; c, c)"
        )
        assert any("k=3 exceeds" in d.message for d in errors(diags))

    def test_bridge_arity(self):
        _, diags = parse_model(
            "component c { availability = 0.9 }\nsystem = bridge(c, c, c)"
        )
        assert any("exactly five" in d.message for d in errors(diags))

    def test_series_arity(self):
        _, diags = parse_model(
            "component c { availability = 0.9 }\nsystem = series(c)"
        )
        assert any("at least two" in d.message for d in errors(diags))

    def test_unknown_reference_in_system(self):
        _, diags = parse_model(
            "component c { availability = 0.9 }\nsystem = ghost"
        )
        assert any("unknown component 'ghost'" in d.message for d in errors(diags))

    def test_unknown_reference_in_edge(self):
        _, diags = parse_model(
            "component c { availability = 0.9 }\n"
            "network { source = a, terminal = b, edge(a, b, ghost) }\n"
        )
        assert any("unknown component 'ghost'" in d.message for d in errors(diags))

    def test_reserved_word_as_id(self):
        _, diags = parse_model(
            "component series { availability = 0.9 }\nsystem = series"
        )
        assert any("reserved word" in d.message for d in errors(diags))

    def test_network_needs_an_edge(self):
        _, diags = parse_model(
            "component c { availability = 0.9 }\n"
            "network { source = a, terminal = b }\n"
        )
        assert any("at least one edge" in d.message for d in errors(diags))

    def test_unexpected_character(self):
        _, diags = parse_model("component c1 { availability = 0.9 }\nsystem = c1\n@")
        assert any("unexpected character" in d.message for d in errors(diags))

    def test_recovery_reports_multiple_components(self):
        # panic recovery resumes at the next top-level keyword, so both
        # broken components are diagnosed in one pass
        _, diags = parse_model(
            "component a { availability = 1.5 }\n"
            "component b { availability = 2.5 }\n"
            "system = series(a, b)\n"
        )
        bad = [d for d in errors(diags) if "out of [0, 1]" in d.message]
        assert len(bad) == 2

    def test_spans_use_utf8_byte_offsets(self):
        # the ä is two bytes in UTF-8, so byte offsets shift while
        # line/column keep counting characters
        text = "# über\ncomponent c1 { availability = 1.5 }\nsystem = c1"
        _, diags = parse_model(text)
        [d] = errors(diags)
        assert d.span.line == 2
        assert d.span.column == 31
        value_byte = text.encode("utf-8").index(b"1.5")
        assert d.span.start == value_byte


class TestFormatting:
    def test_canonical_form(self):
        model, _ = parse_model(
            "component db  {  mtbf_h=2000 ,mdt_h = 6 }\nsystem=db\n"
        )
        assert format_model(model) == (
            "component db { mtbf_h = 2000.0, mdt_h = 6.0 }\nsystem = db\n"
        )

    def test_round_trip_block_model(self):
        text = (
            "component web { availability = 0.995 }\n"
            "component db { mtbf_h = 2000, mdt_h = 6 }\n"
            "system = parallel(series(web, db), kofn(2; web, db, web))\n"
        )
        first, diags = parse_model(text)
        assert diags == []
        second, diags2 = parse_model(format_model(first))
        assert diags2 == []
        assert first == second

    def test_round_trip_network_model(self):
        text = (
            "component link { availability = 0.99 }\n"
            "network { source = a, terminal = d, edge(a, b, link), edge(b, d, link) }\n"
        )
        first, diags = parse_model(text)
        assert diags == []
        second, diags2 = parse_model(format_model(first))
        assert diags2 == []
        assert first == second

    def test_round_trip_generated_models(self):
        rng = random.Random(2024)
        for _ in range(40):
            tree, env = random_tree(rng, max_depth=3, max_leaves=8)
            components = {
                cid: Component.direct(cid, round(a, 6)) for cid, a in env.items()
            }
            model = Model(components=components, system=tree)
            text = format_model(model)
            back, diags = parse_model(text)
            assert diags == []
            assert back == model
