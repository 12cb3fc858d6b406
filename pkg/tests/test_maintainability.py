import pytest

from availkit import (
    MaintainabilityParams,
    MeanTimes,
    availability_from_times,
    mean_down_time,
)


def params(**overrides):
    base = dict(mttres_h=2.0, mldt_h=4.0, madt_h=1.0, pnrs=0.99, tat_h=168.0)
    base.update(overrides)
    return MaintainabilityParams(**base)


class TestMeanDownTime:
    def test_worked_example_is_exact(self):
        # 2 + 4 + 1 + 0.01 * 168 = 8.68, and the decimal-precision
        # complement of pnrs keeps the 0.01 factor exact, so the sum
        # lands on 8.68 to the bit.
        assert mean_down_time(params()) == 8.68

    def test_perfect_sparing_drops_turnaround(self):
        assert mean_down_time(params(pnrs=1.0, tat_h=500.0)) == 7.0

    def test_no_sparing_pays_full_turnaround(self):
        assert mean_down_time(params(pnrs=0.0, tat_h=10.0)) == 17.0

    def test_zero_everything(self):
        p = MaintainabilityParams(0.0, 0.0, 0.0, 1.0, 0.0)
        assert mean_down_time(p) == 0.0

    def test_rejects_negative_times(self):
        with pytest.raises(ValueError):
            params(mttres_h=-1.0)
        with pytest.raises(ValueError):
            params(tat_h=-0.5)

    def test_rejects_bad_pnrs(self):
        with pytest.raises(ValueError):
            params(pnrs=1.2)


class TestAvailabilityFromTimes:
    def test_worked_example(self):
        a = availability_from_times(100000.0, 8.68)
        assert abs(float(a) - 100000.0 / 100008.68) < 1e-16

    def test_zero_downtime_is_perfect(self):
        assert float(availability_from_times(1000.0, 0.0)) == 1.0

    def test_equal_up_and_down_is_half(self):
        assert float(availability_from_times(5.0, 5.0)) == 0.5

    def test_rejects_nonpositive_mtbf(self):
        with pytest.raises(ValueError):
            availability_from_times(0.0, 1.0)
        with pytest.raises(ValueError):
            availability_from_times(-10.0, 1.0)

    def test_rejects_negative_mdt(self):
        with pytest.raises(ValueError):
            availability_from_times(10.0, -1.0)


class TestMeanTimes:
    def test_stores_what_is_given(self):
        t = MeanTimes(mtbf_h=100.0, mdt_h=2.0)
        assert t.mtbf_h == 100.0
        assert t.mdt_h == 2.0
        assert t.mttf_h is None

    def test_rejects_negative_entries(self):
        with pytest.raises(ValueError):
            MeanTimes(mut_h=-1.0)
