"""Mean-time bookkeeping: down-time pipelines and availability quotients.

All durations are hours. Steady-state availability is the fraction of
calendar time a repairable unit is up: MTBF / (MTBF + MDT). The mean down
time itself can be assembled from the repair pipeline — restore time,
logistic delay, administrative delay, and the turn-around of a replacement
weighted by the chance that no ready spare is on site.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .probability import Probability, unavailability

__all__ = [
    "MeanTimes",
    "MaintainabilityParams",
    "mean_down_time",
    "availability_from_times",
]


def _require_nonnegative(name: str, value: float) -> None:
    if not (math.isfinite(value) and value >= 0.0):
        raise ValueError(f"{name} must be a finite value >= 0, got {value!r}")


@dataclass(frozen=True)
class MeanTimes:
    """Bundle of the classic mean-time figures for one unit, in hours.

    All fields are optional; populate whichever the data source provides.
    MTBF = MUT + MDT for repairable units, so either the up-time or the
    between-failures form can be recorded. MTTR, where known, is kept for
    reference — the availability quotient uses MDT, which includes every
    delay, not just hands-on repair.
    """

    mttf_h: float | None = None
    mtbf_h: float | None = None
    mut_h: float | None = None
    mdt_h: float | None = None
    mttr_h: float | None = None

    def __post_init__(self) -> None:
        for name in ("mttf_h", "mtbf_h", "mut_h", "mdt_h", "mttr_h"):
            value = getattr(self, name)
            if value is not None:
                _require_nonnegative(name, value)


@dataclass(frozen=True)
class MaintainabilityParams:
    """Inputs to the mean-down-time pipeline.

    mttres_h  mean time to restore once the fix is in hand
    mldt_h    mean logistic delay (waiting for parts, access, transport)
    madt_h    mean administrative delay (tickets, approvals, scheduling)
    pnrs      probability that a ready spare is on site when needed
    tat_h     turn-around time to obtain a replacement when it is not
    """

    mttres_h: float
    mldt_h: float
    madt_h: float
    pnrs: Probability
    tat_h: float

    def __post_init__(self) -> None:
        for name in ("mttres_h", "mldt_h", "madt_h", "tat_h"):
            _require_nonnegative(name, getattr(self, name))
        object.__setattr__(self, "pnrs", Probability(self.pnrs))


def mean_down_time(params: MaintainabilityParams) -> float:
    """MDT in hours: MTTRes + MLDT + MADT + (1 - PNRS) * TAT.

    The turn-around time contributes only in the fraction of incidents
    where no ready spare is available. A PNRS of 0.99 is a customary
    stocking goal; at 1.0 the turn-around term vanishes entirely.
    """
    spare_missing = unavailability(params.pnrs)
    return params.mttres_h + params.mldt_h + params.madt_h + spare_missing * params.tat_h


def availability_from_times(mtbf_h: float, mdt_h: float) -> Probability:
    """Steady-state availability MTBF / (MTBF + MDT)."""
    if not (math.isfinite(mtbf_h) and mtbf_h > 0.0):
        raise ValueError(f"mtbf_h must be a finite value > 0, got {mtbf_h!r}")
    _require_nonnegative("mdt_h", mdt_h)
    return Probability(mtbf_h / (mtbf_h + mdt_h))
