"""Rainbows, nesting depth and the depth-based queue partition.

A rainbow is a set of pairwise nested edges. The depth of an edge ``e`` is one
plus the size of the largest rainbow strictly inside ``e``; giving every edge
its depth as queue index is a valid partition into ``max depth`` queues, and
no partition can use fewer because the edges of a rainbow need distinct
queues.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import OrderedEdge, OrderedGraph, is_nested

__all__ = [
    "RainbowCertificate",
    "QueueAssignment",
    "nesting_sweep",
    "max_rainbow",
    "nesting_depth",
    "greedy_partition",
    "validate_assignment",
]


@dataclass(frozen=True)
class RainbowCertificate:
    """Pairwise nested edges listed outermost first."""

    edges: tuple[OrderedEdge, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def is_valid(self) -> bool:
        return all(
            is_nested(self.edges[i], self.edges[j])
            for i in range(len(self.edges))
            for j in range(i + 1, len(self.edges))
        )


@dataclass(frozen=True)
class QueueAssignment:
    graph: OrderedGraph
    queue_of: Mapping[OrderedEdge, int]
    k: int

    def queues(self) -> dict[int, list[OrderedEdge]]:
        out: dict[int, list[OrderedEdge]] = {i: [] for i in range(1, self.k + 1)}
        for e in self.graph.edges:
            out.setdefault(self.queue_of[e], []).append(e)
        return out


class _MaxFenwick:
    """Prefix maximum over positions 1..size; values are compared as tuples."""

    def __init__(self, size: int):
        self.size = size
        self.tree: list[tuple[int, int]] = [(0, 0)] * (size + 1)

    def update(self, pos: int, value: tuple[int, int]) -> None:
        while pos <= self.size:
            if value > self.tree[pos]:
                self.tree[pos] = value
            pos += pos & -pos

    def query(self, pos: int) -> tuple[int, int]:
        best = (0, 0)
        while pos > 0:
            if self.tree[pos] > best:
                best = self.tree[pos]
            pos -= pos & -pos
        return best


def nesting_sweep(n: int, edges: Sequence[tuple[int, int]]) -> tuple[list[int], list[int]]:
    """Depth of every edge plus a predecessor link, in O(m log n).

    ``edges`` must be in canonical order (left asc, right asc). Returns
    ``(depth, inner)`` indexed like ``edges``; ``inner[i]`` is the index of the
    canonically smallest edge nested inside edge ``i`` with depth
    ``depth[i] - 1``, or -1.

    Edges are swept by left endpoint descending so everything nested inside
    the current edge has already been inserted. Edges sharing a left endpoint
    never nest, so a whole group is queried before any of it is inserted.
    """
    m = len(edges)
    depth = [0] * m
    inner = [-1] * m
    fen = _MaxFenwick(n)
    i = m - 1
    while i >= 0:
        j = i
        while j > 0 and edges[j - 1][0] == edges[i][0]:
            j -= 1
        for t in range(j, i + 1):
            d, neg_idx = fen.query(edges[t][1] - 1)
            depth[t] = d + 1
            inner[t] = -neg_idx if d > 0 else -1
        for t in range(j, i + 1):
            # ties on depth prefer the smaller canonical index
            fen.update(edges[t][1], (depth[t], -t))
        i = j - 1
    return depth, inner


def max_rainbow(g: OrderedGraph) -> tuple[int, RainbowCertificate]:
    """Size of the largest rainbow and a witness.

    Among maximum rainbows the lexicographically smallest edge sequence
    (outermost first, canonical edge order) is returned.
    """
    edges = g.edges
    if not edges:
        return 0, RainbowCertificate(())
    depth, inner = nesting_sweep(g.n, edges)
    best = max(depth)
    start = depth.index(best)
    chain = []
    while start != -1:
        chain.append(edges[start])
        start = inner[start]
    return best, RainbowCertificate(tuple(chain))


def nesting_depth(g: OrderedGraph) -> dict[OrderedEdge, int]:
    depth, _ = nesting_sweep(g.n, g.edges)
    return dict(zip(g.edges, depth))


def greedy_partition(g: OrderedGraph) -> QueueAssignment:
    depth = nesting_depth(g)
    return QueueAssignment(g, depth, max(depth.values(), default=0))


def validate_assignment(a: QueueAssignment) -> bool:
    """True iff every edge has a queue in 1..k and no queue holds a nested pair."""
    classes: dict[int, list[OrderedEdge]] = defaultdict(list)
    for e in a.graph.edges:
        q = a.queue_of.get(e)
        if q is None or not 1 <= q <= a.k:
            return False
        classes[q].append(e)
    for members in classes.values():
        for i, e in enumerate(members):
            for f in members[i + 1:]:
                if is_nested(e, f) or is_nested(f, e):
                    return False
    return True
