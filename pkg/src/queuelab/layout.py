"""Queue-number of abstract graphs by search over vertex orderings."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .core import LabelledGraph, OrderedGraph
from .rainbow import QueueAssignment, greedy_partition, max_rainbow
from .rng import SplitMix64

__all__ = [
    "LayoutResult",
    "DEFAULT_NODE_BUDGET",
    "ordered_queue_number",
    "bfs_order",
    "exact_queue_number",
    "heuristic_queue_number",
    "edge_count_lower_bound",
]

DEFAULT_NODE_BUDGET = 10**7


@dataclass(frozen=True)
class LayoutResult:
    queue_number: int
    witness_order: tuple[int, ...]
    witness_assignment: QueueAssignment
    exact: bool
    nodes: int = 0


def ordered_queue_number(g: OrderedGraph) -> int:
    return max_rainbow(g)[0]


def _result(g: LabelledGraph, order, exact: bool, nodes: int = 0) -> LayoutResult:
    order = tuple(order)
    assignment = greedy_partition(g.relabel(order))
    return LayoutResult(assignment.k, order, assignment, exact, nodes)


def bfs_order(g: LabelledGraph) -> list[int]:
    """Breadth-first order, restarting at the smallest unvisited vertex; neighbours ascending."""
    seen = [False] * (g.n + 1)
    order: list[int] = []
    for root in range(1, g.n + 1):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g.neighbors(v)):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def heuristic_queue_number(g: LabelledGraph, restarts: int = 32, seed: int = 0) -> LayoutResult:
    """Best of the BFS ordering and ``restarts`` uniformly random orderings."""
    if restarts < 1:
        raise ValueError("restarts must be positive")
    best_order = bfs_order(g)
    best = ordered_queue_number(g.relabel(best_order))
    rng = SplitMix64(seed)
    for _ in range(restarts):
        if best == 0:
            break
        order = list(range(1, g.n + 1))
        rng.shuffle(order)
        q = ordered_queue_number(g.relabel(order))
        if q < best:
            best, best_order = q, order
    return _result(g, best_order, exact=False)


def edge_count_lower_bound(n_active: int, m: int) -> int:
    """Queues needed by edge count alone.

    Two distinct edges of a queue cannot have the same endpoint sum, and a
    simple graph on ``n`` vertices has sums in ``3..2n-1``, so a queue holds at
    most ``2n - 3`` edges.
    """
    if m == 0:
        return 0
    return max(1, -(-m // max(1, 2 * n_active - 3)))


def exact_queue_number(
    g: LabelledGraph,
    node_budget: int = DEFAULT_NODE_BUDGET,
    *,
    use_symmetry: bool = True,
    use_lower_bound: bool = True,
    seed: int = 0,
) -> LayoutResult:
    """Minimum queue count over all vertex orderings, by branch-and-bound.

    The ordering is grown left to right. A newly placed vertex only adds edges
    whose right end is the new rightmost position, so those edges can only be
    the outer edge of a rainbow and earlier depths never change; each new
    edge's depth is one more than the deepest live edge starting strictly
    right of its left end. A branch is cut as soon as the live rainbow reaches
    the incumbent. With ``use_symmetry`` only orderings whose first vertex is
    smaller than their last are explored (reversal preserves rainbows).

    ``node_budget`` caps the number of partial orderings expanded; when it
    runs out the best ordering so far is returned with ``exact=False``.
    """
    if not g.simple:
        raise ValueError("exact_queue_number needs a simple graph")
    if node_budget < 1:
        raise ValueError("node_budget must be positive")
    if g.m == 0:
        return _result(g, range(1, g.n + 1), exact=True)

    active = [v for v in range(1, g.n + 1) if g.neighbors(v)]
    isolated = [v for v in range(1, g.n + 1) if not g.neighbors(v)]
    n_act = len(active)

    start = heuristic_queue_number(g, restarts=8, seed=seed)
    incumbent = start.queue_number
    best_order = [v for v in start.witness_order if g.neighbors(v)]
    floor = edge_count_lower_bound(n_act, g.m) if use_lower_bound else 1
    if incumbent <= floor:
        return _result(g, best_order + isolated, exact=True)

    pos: dict[int, int] = {}
    order: list[int] = []
    # deepest live edge by left position; index 0 unused
    deepest_at = [0] * (n_act + 2)
    nodes = 0
    exhausted = False

    def extend(cur: int) -> bool:
        """Returns True when the search must stop (budget or proven optimum)."""
        nonlocal incumbent, best_order, nodes, exhausted
        p = len(order) + 1
        if p > n_act:
            incumbent = cur
            best_order = list(order)
            return incumbent <= floor
        remaining = [v for v in active if v not in pos]
        if use_symmetry and p >= 2 and remaining[-1] < order[0]:
            return False
        for v in remaining:
            if use_symmetry and p == n_act and n_act >= 2 and v < order[0]:
                continue
            nodes += 1
            if nodes > node_budget:
                exhausted = True
                return True
            lefts = [pos[u] for u in g.neighbors(v) if u in pos]
            new_depths = []
            new_max = cur
            for left in lefts:
                d = 1 + max(deepest_at[left + 1:p], default=0)
                new_depths.append((left, d))
                if d > new_max:
                    new_max = d
            if new_max >= incumbent:
                continue
            saved = [(left, deepest_at[left]) for left in lefts]
            for left, d in new_depths:
                if d > deepest_at[left]:
                    deepest_at[left] = d
            pos[v] = p
            order.append(v)
            stop = extend(new_max)
            order.pop()
            del pos[v]
            for left, old in reversed(saved):
                deepest_at[left] = old
            if stop:
                return True
        return False

    extend(0)
    return _result(g, best_order + isolated, exact=not exhausted, nodes=nodes)
