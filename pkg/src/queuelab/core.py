"""Ordered and labelled graphs, the nesting predicate, and the graph text format.

Vertices are 1-based throughout. An ordered graph's vertex set is ``1..n`` and
the numbering *is* the linear order. Loops are allowed in ordered graphs;
parallel edges never are.

Text format::

    # comment
    4
    1 2
    2 3
    3 3

The first non-comment line is ``n``; every following non-empty line is an
edge ``u v``.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from typing import IO, Iterable, NamedTuple, Union

__all__ = [
    "GraphFormatError",
    "OrderedEdge",
    "OrderedGraph",
    "LabelledGraph",
    "normalize_edge",
    "is_nested",
    "are_nested",
    "reverse_graph",
    "parse_graph",
    "read_graph",
    "format_graph",
    "write_graph",
]


class GraphFormatError(ValueError):
    """Malformed graph input. ``line`` is 1-based, or None when not line-specific."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OrderedEdge(NamedTuple):
    left: int
    right: int

    @property
    def is_loop(self) -> bool:
        return self.left == self.right


def normalize_edge(u: int, v: int) -> OrderedEdge:
    if u < 1 or v < 1:
        raise ValueError(f"vertices are 1-based, got ({u}, {v})")
    return OrderedEdge(u, v) if u <= v else OrderedEdge(v, u)


def is_nested(e: tuple[int, int], f: tuple[int, int]) -> bool:
    """True iff ``f`` is nested inside ``e``.

    Both inequalities are strict, so edges sharing an endpoint never nest.
    """
    return e[0] < f[0] and f[1] < e[1]


def are_nested(e: tuple[int, int], f: tuple[int, int]) -> bool:
    return is_nested(e, f) or is_nested(f, e)


def _canonical_edges(n: int, pairs: Iterable[tuple[int, int]], allow_loops: bool) -> tuple[OrderedEdge, ...]:
    seen: set[OrderedEdge] = set()
    for u, v in pairs:
        e = normalize_edge(int(u), int(v))
        if e.right > n:
            raise ValueError(f"edge {tuple(e)} has a vertex outside 1..{n}")
        if e.is_loop and not allow_loops:
            raise ValueError(f"loop {tuple(e)} in a simple graph")
        if e in seen:
            raise ValueError(f"duplicate edge {tuple(e)}")
        seen.add(e)
    return tuple(sorted(seen))


@dataclass(frozen=True)
class OrderedGraph:
    """Ordered graph on vertices ``1..n``; edges kept sorted (left asc, right asc)."""

    n: int
    edges: tuple[OrderedEdge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        object.__setattr__(self, "edges", _canonical_edges(self.n, self.edges, allow_loops=True))

    @property
    def m(self) -> int:
        return len(self.edges)

    def __contains__(self, edge) -> bool:
        return normalize_edge(*edge) in set(self.edges)

    def with_edge(self, u: int, v: int) -> "OrderedGraph":
        return OrderedGraph(self.n, self.edges + (normalize_edge(u, v),))


@dataclass(frozen=True)
class LabelledGraph:
    """Abstract graph on named vertices ``1..n``."""

    n: int
    edges: tuple[OrderedEdge, ...] = ()
    simple: bool = True
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = _canonical_edges(self.n, self.edges, allow_loops=not self.simple)
        object.__setattr__(self, "edges", edges)
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        # a loop contributes 2
        d = len(self._adj[v])
        return d + 1 if v in self._adj[v] else d

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(1, self.n + 1)]

    def is_regular(self, delta: int) -> bool:
        return all(d == delta for d in self.degrees())

    def relabel(self, order: Iterable[int]) -> OrderedGraph:
        """Lay the graph out along ``order`` (a permutation of 1..n, leftmost first)."""
        order = list(order)
        if sorted(order) != list(range(1, self.n + 1)):
            raise ValueError("order must be a permutation of 1..n")
        pos = {v: i for i, v in enumerate(order, start=1)}
        return OrderedGraph(self.n, [(pos[u], pos[v]) for u, v in self.edges])


def reverse_graph(g: OrderedGraph) -> OrderedGraph:
    """Apply v -> n+1-v."""
    return OrderedGraph(g.n, [(g.n + 1 - v, g.n + 1 - u) for u, v in g.edges])


def parse_graph(text: str, kind: str = "ordered", simple: bool = True) -> OrderedGraph | LabelledGraph:
    """Parse the text format. ``kind`` is ``"ordered"`` or ``"labelled"``."""
    if kind not in ("ordered", "labelled"):
        raise ValueError(f"unknown graph kind {kind!r}")
    n = None
    pairs: list[tuple[int, int]] = []
    seen: dict[OrderedEdge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"expected integers, got {line!r}", lineno) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise GraphFormatError("first line must be a single vertex count", lineno)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        u, v = nums
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"vertex out of range 1..{n} in {line!r}", lineno)
        if u == v and kind == "labelled" and simple:
            raise GraphFormatError(f"loop {u} {v} in a simple graph", lineno)
        e = normalize_edge(u, v)
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e.left} {e.right} (first on line {seen[e]})", lineno)
        seen[e] = lineno
        pairs.append(e)
    if n is None:
        raise GraphFormatError("missing vertex count")
    if kind == "ordered":
        return OrderedGraph(n, pairs)
    return LabelledGraph(n, pairs, simple=simple)


def read_graph(source: Union[str, os.PathLike, IO[str]], kind: str = "ordered", simple: bool = True):
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = source.read()
    return parse_graph(text, kind=kind, simple=simple)


def format_graph(g: OrderedGraph | LabelledGraph) -> str:
    """Canonical serialization: vertex count, then edges sorted (left asc, right asc)."""
    buf = io.StringIO()
    buf.write(f"{g.n}\n")
    for u, v in g.edges:
        buf.write(f"{u} {v}\n")
    return buf.getvalue()


def write_graph(g: OrderedGraph | LabelledGraph, target: Union[str, os.PathLike, IO[str]]) -> None:
    text = format_graph(g)
    if isinstance(target, (str, os.PathLike)):
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        target.write(text)
