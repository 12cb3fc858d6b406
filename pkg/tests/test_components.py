import pytest

from availkit import (
    Component,
    DirectAvailability,
    MaintainabilityParams,
    MtbfMaintainability,
    MtbfMdt,
    component_availability,
    component_mdt,
    derive_environment,
)

MAINT = MaintainabilityParams(
    mttres_h=2.0, mldt_h=4.0, madt_h=1.0, pnrs=0.99, tat_h=168.0
)


class TestConstruction:
    def test_direct(self):
        c = Component.direct("db", 0.995)
        assert isinstance(c.spec, DirectAvailability)
        assert float(component_availability(c)) == 0.995

    def test_from_mtbf_mdt(self):
        c = Component.from_mtbf_mdt("srv", 1000.0, 10.0)
        assert isinstance(c.spec, MtbfMdt)
        assert float(component_availability(c)) == 1000.0 / 1010.0

    def test_from_maintainability(self):
        c = Component.from_maintainability("srv", 100000.0, MAINT)
        assert isinstance(c.spec, MtbfMaintainability)
        a = float(component_availability(c))
        assert abs(a - 100000.0 / 100008.68) < 1e-16

    def test_rejects_empty_id(self):
        with pytest.raises(ValueError):
            Component.direct("", 0.9)

    def test_bad_numbers_fail_at_construction_with_id(self):
        with pytest.raises(ValueError, match="'srv'"):
            Component.from_mtbf_mdt("srv", -5.0, 1.0)
        with pytest.raises(ValueError, match="'db'"):
            Component.direct("db", 1.5)


class TestMdt:
    def test_direct_has_none(self):
        assert component_mdt(Component.direct("a", 0.9)) is None

    def test_pair_reports_given_mdt(self):
        assert component_mdt(Component.from_mtbf_mdt("a", 100.0, 3.5)) == 3.5

    def test_pipeline_reports_derived_mdt(self):
        c = Component.from_maintainability("a", 100000.0, MAINT)
        assert component_mdt(c) == 8.68


class TestDeriveEnvironment:
    def test_from_mapping(self):
        comps = {
            "a": Component.direct("a", 0.9),
            "b": Component.from_mtbf_mdt("b", 90.0, 10.0),
        }
        env = derive_environment(comps)
        assert set(env) == {"a", "b"}
        assert float(env["a"]) == 0.9
        assert float(env["b"]) == 0.9

    def test_from_iterable(self):
        env = derive_environment([Component.direct("x", 0.5)])
        assert float(env["x"]) == 0.5
