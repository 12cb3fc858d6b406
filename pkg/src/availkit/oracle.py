"""Independent brute-force checks for the closed-form evaluators.

Everything here works from the boolean structure function over explicit
component states — no probability algebra is shared with
``availkit.evaluate`` or ``availkit.network``, so agreement between the
two routes is meaningful evidence.

Monte Carlo reproducibility
---------------------------
Sampling uses the splitmix64 generator, defined by its published
constants rather than any platform RNG, so the stream can be reproduced
in any language:

    gamma = 0x9E3779B97F4A7C15
    z = (seed + (i + 1) * gamma) mod 2**64        # draw index i, from 0
    z ^= z >> 30;  z = z * 0xBF58476D1CE4E5B9 mod 2**64
    z ^= z >> 27;  z = z * 0x94D049BB133111EB mod 2**64
    z ^= z >> 31
    u_i = (z >> 11) * 2.0**-53                    # uniform in [0, 1)

Sample j consumes draws j*m .. j*m+m-1, one per instance in canonical
order (see ``instances``); instance k is up when u < availability_k.
Results are a pure function of (structure, environment, samples, seed).
The whole budget runs on one stream — there is no worker splitting.
"""

from __future__ import annotations

import math
from typing import Mapping, Sequence

import numpy as np

from .blocks import Block, Bridge, KofN, Leaf, Parallel, Series, leaves
from .network import Network
from .probability import Probability

__all__ = [
    "EnumerationCapError",
    "Structure",
    "StateVector",
    "instances",
    "structure_function",
    "enumerate_availability",
    "monte_carlo_availability",
]

Structure = Block | Network

# States are given positionally, aligned with instances(structure).
StateVector = Sequence[bool]

DEFAULT_ENUMERATION_CAP = 20

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_MASK64 = (1 << 64) - 1


class EnumerationCapError(RuntimeError):
    """The joint state space is too large to enumerate under the cap."""


def instances(structure: Structure) -> tuple[str, ...]:
    """Component id of each failure instance, in canonical order.

    Instances are the leaf occurrences of a block tree (depth-first) or
    the edges of a network (declaration order). A repeated component id
    still means independent instances; position is their identity.
    """
    if isinstance(structure, Network):
        return tuple(e.component_id for e in structure.edges)
    return tuple(leaves(structure))


def _block_state(block: Block, state: Sequence[bool], cursor: list[int]) -> bool:
    if isinstance(block, Leaf):
        value = bool(state[cursor[0]])
        cursor[0] += 1
        return value
    if isinstance(block, Series):
        results = [_block_state(c, state, cursor) for c in block.children]
        return all(results)
    if isinstance(block, Parallel):
        results = [_block_state(c, state, cursor) for c in block.children]
        return any(results)
    if isinstance(block, KofN):
        results = [_block_state(c, state, cursor) for c in block.children]
        return sum(results) >= block.k
    if isinstance(block, Bridge):
        b1, b2, b3, b4, b5 = (_block_state(c, state, cursor) for c in block.children)
        return (b1 and b4) or (b2 and b5) or (b3 and ((b1 and b5) or (b2 and b4)))
    raise TypeError(f"not a block: {block!r}")


def _network_state(net: Network, state: Sequence[bool]) -> bool:
    if net.source == net.terminal:
        return True
    adj: dict[str, list[str]] = {}
    for up, edge in zip(state, net.edges):
        if up:
            adj.setdefault(edge.a, []).append(edge.b)
            adj.setdefault(edge.b, []).append(edge.a)
    seen = {net.source}
    stack = [net.source]
    while stack:
        for nxt in adj.get(stack.pop(), ()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return net.terminal in seen


def structure_function(structure: Structure, state: StateVector) -> bool:
    """True when the system is up given each instance's boolean state.

    Monotone by construction: repairing an instance never takes the
    system down.
    """
    state = list(state)
    expected = len(instances(structure))
    if len(state) != expected:
        raise ValueError(f"state has {len(state)} entries, structure has {expected}")
    if isinstance(structure, Network):
        return _network_state(structure, state)
    return _block_state(structure, state, [0])


def _instance_availabilities(
    structure: Structure, env: Mapping[str, float]
) -> list[float]:
    out = []
    for cid in instances(structure):
        try:
            out.append(float(Probability(env[cid])))
        except KeyError:
            raise KeyError(f"no availability for component {cid!r}") from None
    return out


def enumerate_availability(
    structure: Structure,
    env: Mapping[str, float],
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Probability:
    """Exact availability by summing the probability of every up-state.

    Walks all 2**n joint states, so n is limited by ``cap``. State order
    is fixed (instance 0 is the lowest bit), making the floating-point
    sum reproducible.
    """
    avails = _instance_availabilities(structure, env)
    n = len(avails)
    if n > cap:
        raise EnumerationCapError(
            f"{n} instances would need 2**{n} states, over the cap of {cap}; "
            "use the Monte Carlo estimate instead"
        )
    is_network = isinstance(structure, Network)
    total = 0.0
    for code in range(1 << n):
        state = [(code >> i) & 1 == 1 for i in range(n)]
        p = 1.0
        for up, a in zip(state, avails):
            p *= a if up else 1.0 - a
        if is_network:
            works = _network_state(structure, state)
        else:
            works = _block_state(structure, state, [0])
        if works:
            total += p
    return Probability(total)


def _splitmix64(seed: int, index: int) -> int:
    """Reference scalar form of the documented stream; draw ``index`` >= 0."""
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _MASK64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _MASK64
    z ^= z >> 31
    return z


def _uniform_block(seed: int, start: int, count: int) -> np.ndarray:
    """Draws start .. start+count-1 of the stream as floats in [0, 1)."""
    idx = np.arange(start, start + count, dtype=np.uint64)
    z = np.uint64(seed & _MASK64) + (idx + np.uint64(1)) * _GAMMA
    z ^= z >> np.uint64(30)
    z *= _MIX1
    z ^= z >> np.uint64(27)
    z *= _MIX2
    z ^= z >> np.uint64(31)
    return (z >> np.uint64(11)).astype(np.float64) * 2.0**-53


def _batch_block(block: Block, working: np.ndarray, cursor: list[int]) -> np.ndarray:
    if isinstance(block, Leaf):
        column = working[:, cursor[0]]
        cursor[0] += 1
        return column
    if isinstance(block, (Series, Parallel)):
        results = [_batch_block(c, working, cursor) for c in block.children]
        op = np.logical_and if isinstance(block, Series) else np.logical_or
        return op.reduce(results, axis=0)
    if isinstance(block, KofN):
        results = [_batch_block(c, working, cursor) for c in block.children]
        counts = np.zeros(working.shape[0], dtype=np.int16)
        for r in results:
            counts += r
        return counts >= block.k
    if isinstance(block, Bridge):
        b1, b2, b3, b4, b5 = [_batch_block(c, working, cursor) for c in block.children]
        return (b1 & b4) | (b2 & b5) | (b3 & ((b1 & b5) | (b2 & b4)))
    raise TypeError(f"not a block: {block!r}")


def _batch_network(net: Network, working: np.ndarray) -> np.ndarray:
    nodes = sorted({net.source, net.terminal} | {n for e in net.edges for n in (e.a, e.b)})
    index = {n: i for i, n in enumerate(nodes)}
    ends = [(index[e.a], index[e.b]) for e in net.edges]
    reach = np.zeros((working.shape[0], len(nodes)), dtype=bool)
    reach[:, index[net.source]] = True
    for _ in range(len(nodes)):
        changed = False
        for column, (ai, bi) in enumerate(ends):
            up = working[:, column]
            forward = reach[:, ai] & up & ~reach[:, bi]
            if forward.any():
                reach[:, bi] |= forward
                changed = True
            backward = reach[:, bi] & up & ~reach[:, ai]
            if backward.any():
                reach[:, ai] |= backward
                changed = True
        if not changed:
            break
    return reach[:, index[net.terminal]]


def _batch_states(structure: Structure, working: np.ndarray) -> np.ndarray:
    if isinstance(structure, Network):
        return _batch_network(structure, working)
    return _batch_block(structure, working, [0])


def monte_carlo_availability(
    structure: Structure,
    env: Mapping[str, float],
    samples: int,
    seed: int,
) -> tuple[Probability, float]:
    """Estimate availability by sampling joint states.

    Returns (estimate, half-width of the 95% normal-approximation
    confidence interval, 1.96 * sqrt(p(1-p)/n)). The draw stream is
    fixed by ``seed`` as documented in the module docstring, so repeat
    calls are bit-identical.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    avails = np.array(_instance_availabilities(structure, env))
    m = len(avails)
    hits = 0
    chunk = 1 << 16
    for start in range(0, samples, chunk):
        count = min(chunk, samples - start)
        draws = _uniform_block(seed, start * m, count * m)
        working = draws.reshape(count, m) < avails[None, :]
        hits += int(np.count_nonzero(_batch_states(structure, working)))
    estimate = hits / samples
    half_width = 1.96 * math.sqrt(estimate * (1.0 - estimate) / samples)
    return Probability(estimate), half_width
