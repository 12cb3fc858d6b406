"""Shared generators for the fuzz corpora used across test modules."""

from __future__ import annotations

import random

from availkit import Bridge, Edge, KofN, Leaf, Network, Parallel, Series


def random_tree(rng: random.Random, max_depth: int = 4, max_leaves: int = 15):
    """A random block tree with distinct leaf ids and its environment.

    Returns (block, env) where env maps every leaf id to a random
    availability in (0, 1).
    """
    counter = [0]

    def split(budget: int, parts: int) -> list[int]:
        cuts = sorted(rng.sample(range(1, budget), parts - 1))
        return [b - a for a, b in zip([0] + cuts, cuts + [budget])]

    def build(depth: int, budget: int):
        if depth == 0 or budget < 2 or rng.random() < 0.3:
            cid = f"c{counter[0]}"
            counter[0] += 1
            return Leaf(cid)
        if budget >= 5 and rng.random() < 0.15:
            parts = split(budget, 5)
            return Bridge(*(build(depth - 1, p) for p in parts))
        width = rng.randint(2, min(4, budget))
        children = tuple(build(depth - 1, p) for p in split(budget, width))
        kind = rng.random()
        if kind < 0.4:
            return Series(children)
        if kind < 0.8:
            return Parallel(children)
        return KofN(rng.randint(1, len(children)), children)

    block = build(max_depth, max_leaves)
    env = {f"c{i}": rng.uniform(0.05, 0.999) for i in range(counter[0])}
    return block, env


def random_network(rng: random.Random, max_edges: int = 12):
    """A random connected two-terminal network and its environment.

    Builds a spanning tree over a handful of nodes (so source and
    terminal are connected when everything is up), then sprinkles in
    extra edges, some of which duplicate endpoints to exercise the
    parallel-reduction path.
    """
    n_nodes = rng.randint(2, 6)
    nodes = [f"n{i}" for i in range(n_nodes)]
    edges = []
    for i in range(1, n_nodes):
        other = nodes[rng.randrange(i)]
        edges.append((nodes[i], other))
    while len(edges) < rng.randint(n_nodes - 1, max_edges):
        a, b = rng.sample(nodes, 2)
        edges.append((a, b))
    built = tuple(
        Edge(f"e{i}", a, b, f"x{i}") for i, (a, b) in enumerate(edges)
    )
    env = {f"x{i}": rng.uniform(0.05, 0.999) for i in range(len(built))}
    source = nodes[0]
    terminal = nodes[-1] if n_nodes > 1 else nodes[0]
    return Network(edges=built, source=source, terminal=terminal), env
