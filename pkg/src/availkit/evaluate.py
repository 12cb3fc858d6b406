"""Closed-form availability evaluation for block structures.

All operations assume independent components and fold strictly left to
right over the given order, so results are bit-reproducible. No
compensated summation is used — plain IEEE double arithmetic throughout.
"""

from __future__ import annotations

import math
from typing import Mapping, Sequence

import numpy as np

from .blocks import Block, Bridge, KofN, Leaf, Parallel, Series
from .probability import Probability

__all__ = [
    "Environment",
    "EvaluationError",
    "eval_series",
    "eval_parallel",
    "eval_kofn",
    "eval_bridge",
    "eval_block",
]

# Availability per component id; must cover every leaf of the structure.
Environment = Mapping[str, float]


class EvaluationError(ValueError):
    """A structure could not be evaluated against its environment."""


def eval_series(avails: Sequence[float]) -> Probability:
    """All parts must be up: the product of availabilities."""
    if not avails:
        raise EvaluationError("series requires at least one availability")
    return Probability(math.prod(avails))


def eval_parallel(avails: Sequence[float]) -> Probability:
    """At least one part up: one minus the product of the complements."""
    if not avails:
        raise EvaluationError("parallel requires at least one availability")
    return Probability(1.0 - math.prod(1.0 - a for a in avails))


def eval_kofn(k: int, avails: Sequence[float]) -> Probability:
    """At least k of the listed parts up (Poisson-binomial tail).

    The count distribution is folded in O(n^2); parts may have distinct
    availabilities. The k == 1 tail is taken as 1 - P(none up) and the
    k == n tail collapses to the bare product, so the degenerate cases
    coincide bit-for-bit with eval_parallel and eval_series.
    """
    n = len(avails)
    if n == 0:
        raise EvaluationError("kofn requires at least one availability")
    if not 1 <= k <= n:
        raise EvaluationError(f"k must satisfy 1 <= k <= {n}, got {k}")
    dist = np.zeros(n + 1)
    dist[0] = 1.0
    for p in avails:
        p = float(p)
        nxt = dist * (1.0 - p)
        nxt[1:] += dist[:-1] * p
        dist = nxt
    if k == 1:
        return Probability(1.0 - float(dist[0]))
    tail = 0.0
    for term in dist[k:].tolist():
        tail += term
    return Probability(tail)


def eval_bridge(a1: float, a2: float, a3: float, a4: float, a5: float) -> Probability:
    """Five-slot bridge: two columns (a1/a2 left, a4/a5 right) with a
    cross-link a3, conditioned on the state of the cross-link.

    Cross up: each column is a parallel pair and the columns are in
    series. Cross down: the two straight paths a1-a4 and a2-a5 stand in
    parallel.
    """
    columns = (a1 + a2 - a1 * a2) * (a4 + a5 - a4 * a5)
    paths = 1.0 - (1.0 - a1 * a4) * (1.0 - a2 * a5)
    return Probability(a3 * columns + (1.0 - a3) * paths)


def eval_block(block: Block, env: Environment) -> Probability:
    """Evaluate a block tree against per-component availabilities.

    Duplicate leaf ids refer to independent replicas of the same
    component type; each occurrence contributes its availability
    independently.
    """
    if isinstance(block, Leaf):
        try:
            return Probability(env[block.component_id])
        except KeyError:
            raise EvaluationError(
                f"no availability for component {block.component_id!r}"
            ) from None
    if isinstance(block, Series):
        return eval_series([eval_block(c, env) for c in block.children])
    if isinstance(block, Parallel):
        return eval_parallel([eval_block(c, env) for c in block.children])
    if isinstance(block, KofN):
        return eval_kofn(block.k, [eval_block(c, env) for c in block.children])
    if isinstance(block, Bridge):
        return eval_bridge(
            eval_block(block.b1, env),
            eval_block(block.b2, env),
            eval_block(block.b3, env),
            eval_block(block.b4, env),
            eval_block(block.b5, env),
        )
    raise EvaluationError(f"not a block: {block!r}")
