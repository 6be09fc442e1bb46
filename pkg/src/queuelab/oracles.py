"""Brute-force reference computations.

Deliberately naive and independent of the fast paths they check: no sweep, no
branch-and-bound, only the definitions applied by exhaustive search.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .core import LabelledGraph, OrderedGraph, is_nested

__all__ = [
    "all_candidate_edges",
    "brute_max_rainbow",
    "brute_min_partition",
    "brute_queue_number",
    "brute_is_queue",
]


def all_candidate_edges(n: int, loops: bool = True) -> list[tuple[int, int]]:
    """Every pair (u, v) with u <= v (u < v without loops), canonical order."""
    lo = 0 if loops else 1
    return [(u, v) for u in range(1, n + 1) for v in range(u + lo, n + 1)]


def brute_is_queue(edges: Sequence[tuple[int, int]]) -> bool:
    return not any(
        is_nested(e, f) or is_nested(f, e) for e, f in itertools.combinations(edges, 2)
    )


def brute_max_rainbow(edges: Sequence[tuple[int, int]]) -> int:
    """Largest pairwise-nested subset, by scanning all 2^m subsets."""
    m = len(edges)
    nested = [[i != j and (is_nested(edges[i], edges[j]) or is_nested(edges[j], edges[i]))
               for j in range(m)] for i in range(m)]
    best = 0
    for mask in range(1 << m):
        size = bin(mask).count("1")
        if size <= best:
            continue
        idx = [i for i in range(m) if mask >> i & 1]
        if all(nested[a][b] for a, b in itertools.combinations(idx, 2)):
            best = size
    return best


def brute_min_partition(edges: Sequence[tuple[int, int]]) -> int:
    """Fewest classes in a partition of ``edges`` with no nested pair in a class.

    Tries k = 0, 1, 2, ... and searches all class assignments by backtracking.
    """
    m = len(edges)
    if m == 0:
        return 0
    conflict = [[j for j in range(i) if is_nested(edges[i], edges[j]) or is_nested(edges[j], edges[i])]
                for i in range(m)]

    def colourable(k: int) -> bool:
        colour = [-1] * m

        def place(i: int) -> bool:
            if i == m:
                return True
            used = {colour[j] for j in conflict[i]}
            # symmetry: a new class is only opened as the next unused index
            top = max(colour[:i], default=-1)
            for c in range(min(k, top + 2)):
                if c not in used:
                    colour[i] = c
                    if place(i + 1):
                        return True
            colour[i] = -1
            return False

        return place(0)

    k = 1
    while not colourable(k):
        k += 1
    return k


def brute_queue_number(g: LabelledGraph) -> int:
    """Minimum over all n! orderings of the largest rainbow."""
    if g.m == 0:
        return 0
    best = None
    for perm in itertools.permutations(range(1, g.n + 1)):
        edges = g.relabel(perm).edges
        r = _chain_dp(edges)
        if best is None or r < best:
            best = r
    return best


def _chain_dp(edges: Sequence[tuple[int, int]]) -> int:
    # quadratic longest-chain DP over edges sorted by span; independent of the sweep
    order = sorted(edges, key=lambda e: e[1] - e[0])
    longest = [1] * len(order)
    for i, e in enumerate(order):
        for j in range(i):
            if is_nested(e, order[j]):
                longest[i] = max(longest[i], longest[j] + 1)
    return max(longest, default=0)


def brute_queue_number_ordered(g: OrderedGraph) -> int:
    return brute_min_partition(list(g.edges))
