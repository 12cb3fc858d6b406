"""The model container — components plus the system structure — and its
validation.

Validation never raises: it returns a list of diagnostics, each carrying
a severity, a dotted path into the structure, and a message. Errors make
a model unevaluable; warnings flag suspect but legal constructions (an
unused component, a network that cannot connect even with every edge up).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Union

from .blocks import Block, Bridge, KofN, Leaf, Parallel, Series
from .components import Component
from .network import Network

__all__ = ["Diagnostic", "Model", "validate"]


@dataclass(frozen=True)
class Diagnostic:
    severity: Literal["error", "warning"]
    path: str
    message: str


@dataclass(frozen=True, eq=True)
class Model:
    """A component table (declaration order preserved) and the system it
    feeds — either a block tree or a two-terminal network."""

    components: dict[str, Component] = field(hash=False)
    system: Union[Block, Network]


def _validate_block(
    block: Block, path: str, known: set[str], used: set[str], out: list[Diagnostic]
) -> None:
    if isinstance(block, Leaf):
        used.add(block.component_id)
        if block.component_id not in known:
            out.append(
                Diagnostic("error", path, f"unknown component {block.component_id!r}")
            )
        return
    if isinstance(block, (Series, Parallel, KofN)):
        kind = type(block).__name__.lower()
        if not block.children:
            out.append(Diagnostic("error", path, f"{kind} has no children"))
        if isinstance(block, KofN):
            n = len(block.children)
            if block.k < 1:
                out.append(Diagnostic("error", path, f"k must be >= 1, got {block.k}"))
            elif block.k > n:
                out.append(
                    Diagnostic("error", path, f"k={block.k} exceeds the {n} children")
                )
        for i, child in enumerate(block.children):
            _validate_block(child, f"{path}.children[{i}]", known, used, out)
        return
    if isinstance(block, Bridge):
        for i, child in enumerate(block.children, start=1):
            _validate_block(child, f"{path}.b{i}", known, used, out)
        return
    out.append(Diagnostic("error", path, f"not a block: {block!r}"))


def _validate_network(
    net: Network, path: str, known: set[str], used: set[str], out: list[Diagnostic]
) -> None:
    if net.source == net.terminal:
        out.append(Diagnostic("error", path, "source and terminal must differ"))
    if not net.edges:
        out.append(Diagnostic("error", path, "network has no edges"))
    seen_ids: set[str] = set()
    for i, edge in enumerate(net.edges):
        epath = f"{path}.edges[{i}]"
        if edge.id in seen_ids:
            out.append(Diagnostic("error", epath, f"duplicate edge id {edge.id!r}"))
        seen_ids.add(edge.id)
        for endpoint in (edge.a, edge.b):
            if endpoint not in net.nodes:
                out.append(
                    Diagnostic("error", epath, f"endpoint {endpoint!r} not in node set")
                )
        if edge.a == edge.b:
            out.append(
                Diagnostic(
                    "warning", epath, f"self-loop at {edge.a!r} cannot affect connectivity"
                )
            )
        used.add(edge.component_id)
        if edge.component_id not in known:
            out.append(
                Diagnostic("error", epath, f"unknown component {edge.component_id!r}")
            )
    if net.edges and net.source != net.terminal:
        adj: dict[str, list[str]] = {}
        for edge in net.edges:
            adj.setdefault(edge.a, []).append(edge.b)
            adj.setdefault(edge.b, []).append(edge.a)
        seen = {net.source}
        stack = [net.source]
        while stack:
            for nxt in adj.get(stack.pop(), ()):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if net.terminal not in seen:
            out.append(
                Diagnostic(
                    "warning",
                    path,
                    "terminal is unreachable from source even with all edges up",
                )
            )


def validate(model: Model) -> list[Diagnostic]:
    """Structural checks over a model; deterministic for a given input."""
    out: list[Diagnostic] = []
    known = set(model.components)
    used: set[str] = set()
    if isinstance(model.system, Network):
        _validate_network(model.system, "system", known, used, out)
    else:
        _validate_block(model.system, "system", known, used, out)
    for cid in sorted(known - used):
        out.append(
            Diagnostic("warning", f"components.{cid}", f"component {cid!r} is never used")
        )
    return out
