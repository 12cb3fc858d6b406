"""Probability values and their complements."""

from __future__ import annotations

from decimal import Decimal

__all__ = ["PROBABILITY_TOLERANCE", "Probability", "unavailability"]

# Slack accepted on construction before a value is considered out of range.
# Long products of many availabilities can drift a hair past the boundary;
# anything inside the band is clamped back onto it.
PROBABILITY_TOLERANCE = 1e-12


class Probability(float):
    """A float constrained to the closed interval [0, 1].

    Values outside the interval by more than ``PROBABILITY_TOLERANCE`` are
    rejected outright; values within the band are clamped to the nearest
    boundary so rounding dust never escapes the valid range.
    """

    __slots__ = ()

    def __new__(cls, value: float) -> "Probability":
        v = float(value)
        if v != v:
            raise ValueError("probability must not be NaN")
        if v < -PROBABILITY_TOLERANCE or v > 1.0 + PROBABILITY_TOLERANCE:
            raise ValueError(f"probability {v!r} outside [0, 1]")
        if v < 0.0:
            v = 0.0
        elif v > 1.0:
            v = 1.0
        return super().__new__(cls, v)

    @property
    def value(self) -> float:
        return float(self)

    def __repr__(self) -> str:
        return f"Probability({float.__repr__(self)})"


def unavailability(p: float) -> Probability:
    """Complement of a probability, read at decimal precision.

    The subtraction is carried out against the shortest decimal that
    round-trips to ``p``, so an availability that prints as 0.9999
    complements to exactly 0.0001 — the way the figures are quoted on
    data sheets — instead of picking up binary representation noise.
    The result never differs from the raw IEEE ``1 - p`` by more than
    one unit in the last place.
    """
    a = Probability(p)
    return Probability(float(Decimal(1) - Decimal(float.__repr__(float(a)))))
