"""Exact censuses of ordered queues, k-queues, doublings and labelled graphs.

Candidate edges of an ordered graph on ``n`` vertices are all pairs
``(u, v)`` with ``u <= v``, loops included, so there are ``n(n+1)/2`` of them.
Counts are Python integers and never approximated.

Two independent engines count ordered graphs:

* :func:`iter_queues` / :func:`count_queues_by_edges` backtrack over the
  candidate edges with bitmasks of the nesting conflicts (a queue is an
  independent set of the conflict graph);
* :func:`kqueue_histogram` sweeps left endpoints from right to left and keeps,
  for each partial graph, only the prefix-maximum depth profile over right
  endpoints. Partial graphs with equal profiles extend identically, so they
  are merged.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .core import LabelledGraph, OrderedEdge, OrderedGraph, is_nested
from .layout import exact_queue_number

__all__ = [
    "CensusLimitError",
    "ENUMERATION_LIMIT",
    "KQUEUE_LIMIT",
    "candidate_edges",
    "conflict_masks",
    "iter_queues",
    "enumerate_queues",
    "count_queues_by_edges",
    "queue_counts_by_edges",
    "kqueue_histogram",
    "count_kqueues",
    "count_kqueues_with_sizes",
    "DoublingPattern",
    "doubling_patterns",
    "quotient",
    "double",
    "iter_doublings",
    "DoublingReport",
    "verify_doubling",
    "max_queue_edges",
    "labelled_qn_histogram",
    "count_labelled_qn_le",
    "count_labelled_regular",
    "count_regular_by_pairings",
]

ENUMERATION_LIMIT = 6
KQUEUE_LIMIT = 8
SIZES_LIMIT = 4
LABELLED_LIMIT = 6


class CensusLimitError(ValueError):
    pass


def _check_limit(n: int, limit: int, what: str) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > limit:
        raise CensusLimitError(f"{what}: n={n} exceeds the enumeration limit {limit}")


def candidate_edges(n: int) -> list[OrderedEdge]:
    return [OrderedEdge(u, v) for u in range(1, n + 1) for v in range(u, n + 1)]


def conflict_masks(edges: Sequence[tuple[int, int]]) -> list[int]:
    """Bit ``j`` of ``masks[i]`` is set iff edges ``i`` and ``j`` are nested."""
    masks = [0] * len(edges)
    for i, e in enumerate(edges):
        for j, f in enumerate(edges):
            if is_nested(e, f) or is_nested(f, e):
                masks[i] |= 1 << j
    return masks


def iter_queues(n: int, limit: int = ENUMERATION_LIMIT) -> Iterator[tuple[OrderedEdge, ...]]:
    """Yield the edge tuple of every nesting-free ordered graph on ``n`` vertices."""
    _check_limit(n, limit, "iter_queues")
    edges = candidate_edges(n)
    masks = conflict_masks(edges)
    m = len(edges)
    chosen: list[OrderedEdge] = []

    def walk(i: int, forbidden: int):
        if i == m:
            yield tuple(chosen)
            return
        yield from walk(i + 1, forbidden)
        if not forbidden >> i & 1:
            chosen.append(edges[i])
            yield from walk(i + 1, forbidden | masks[i])
            chosen.pop()

    yield from walk(0, 0)


def queue_counts_by_edges(n: int, limit: int = ENUMERATION_LIMIT) -> list[int]:
    """``[g(n, 0), g(n, 1), ...]`` by memoized bitmask backtracking."""
    _check_limit(n, limit, "queue_counts_by_edges")
    return list(_queue_counts(n))


@lru_cache(maxsize=None)
def _queue_counts(n: int) -> tuple[int, ...]:
    edges = candidate_edges(n)
    masks = conflict_masks(edges)
    m = len(edges)

    @lru_cache(maxsize=None)
    def walk(i: int, forbidden: int) -> tuple[int, ...]:
        # forbidden only holds bits >= i
        if i == m:
            return (1,)
        skip = walk(i + 1, forbidden & ~(1 << i))
        if forbidden >> i & 1:
            return skip
        take = walk(i + 1, (forbidden | masks[i]) & ~((1 << (i + 1)) - 1))
        out = list(skip) + [0] * max(0, len(take) + 1 - len(skip))
        for j, c in enumerate(take):
            out[j + 1] += c
        return tuple(out)

    counts = list(walk(0, 0))
    counts += [0] * (m + 1 - len(counts))
    return tuple(counts)


def enumerate_queues(n: int, limit: int = ENUMERATION_LIMIT) -> int:
    """g(n): number of nesting-free ordered graphs on ``n`` vertices."""
    return sum(queue_counts_by_edges(n, limit))


def count_queues_by_edges(n: int, m: int, limit: int = ENUMERATION_LIMIT) -> int:
    """g(n, m): nesting-free ordered graphs with exactly ``m`` edges."""
    counts = queue_counts_by_edges(n, limit)
    if not 0 <= m <= n * (n + 1) // 2:
        raise ValueError(f"m={m} outside 0..{n * (n + 1) // 2}")
    return counts[m]


def kqueue_histogram(n: int, limit: int = KQUEUE_LIMIT) -> dict[tuple[int, int], int]:
    """Map ``(m, r)`` to the number of ordered graphs with ``m`` edges and largest rainbow ``r``."""
    _check_limit(n, limit, "kqueue_histogram")
    return dict(_kqueue_histogram(n))


@lru_cache(maxsize=None)
def _kqueue_histogram(n: int) -> tuple[tuple[tuple[int, int], int], ...]:
    # profile[x] = deepest chosen edge with right endpoint <= x+1 (0-based x)
    states: dict[tuple[int, ...], Counter] = {tuple([0] * n): Counter({0: 1})}
    for left in range(n, 0, -1):
        rights = list(range(left, n + 1))
        nxt: dict[tuple[int, ...], Counter] = defaultdict(Counter)
        for profile, by_m in states.items():
            for size in range(len(rights) + 1):
                for subset in itertools.combinations(rights, size):
                    new = list(profile)
                    for r in subset:
                        d = 1 + (profile[r - 2] if r >= 2 else 0)
                        for x in range(r - 1, n):
                            if new[x] >= d:
                                break
                            new[x] = d
                    key = tuple(new)
                    bucket = nxt[key]
                    for m, c in by_m.items():
                        bucket[m + size] += c
        states = nxt
    hist: Counter = Counter()
    for profile, by_m in states.items():
        r = profile[-1] if n else 0
        for m, c in by_m.items():
            hist[(m, r)] += c
    return tuple(sorted(hist.items()))


def count_kqueues(n: int, m: int, k: int, limit: int = KQUEUE_LIMIT) -> int:
    """g(n, m, k): ordered graphs with ``m`` edges and no ``(k+1)``-edge rainbow."""
    if m < 0 or k < 0:
        raise ValueError("m and k must be non-negative")
    hist = kqueue_histogram(n, limit)
    return sum(c for (mm, r), c in hist.items() if mm == m and r <= k)


def _splits_into(edges: Sequence[tuple[int, int]], sizes: Sequence[int]) -> bool:
    """Can ``edges`` be split into nesting-free classes of exactly these sizes?"""
    sizes = [s for s in sizes if s > 0]
    k = len(sizes)
    classes: list[list[tuple[int, int]]] = [[] for _ in range(k)]

    def place(i: int) -> bool:
        if i == len(edges):
            return True
        e = edges[i]
        tried = set()
        for c in range(k):
            if len(classes[c]) == sizes[c]:
                continue
            # classes with the same capacity and contents are interchangeable
            sig = (sizes[c], tuple(classes[c]))
            if sig in tried:
                continue
            tried.add(sig)
            if any(is_nested(e, f) or is_nested(f, e) for f in classes[c]):
                continue
            classes[c].append(e)
            if place(i + 1):
                return True
            classes[c].pop()
        return False

    return place(0)


def count_kqueues_with_sizes(n: int, sizes: Sequence[int], limit: int = SIZES_LIMIT) -> int:
    """g(n; m_1, ..., m_k): ordered graphs splitting into queues of exactly these sizes."""
    _check_limit(n, limit, "count_kqueues_with_sizes")
    sizes = list(sizes)
    if any(s < 0 for s in sizes):
        raise ValueError("sizes must be non-negative")
    if sizes != sorted(sizes):
        raise ValueError("sizes must be sorted ascending")
    m = sum(sizes)
    cands = candidate_edges(n)
    return sum(1 for sub in itertools.combinations(cands, m) if _splits_into(sub, sizes))


@dataclass(frozen=True)
class DoublingPattern:
    """Non-nested edges replacing one quotient edge.

    Coordinates are local: for a quotient edge ``v < w`` vertices 1, 2 stand
    for ``2v-1, 2v`` and 3, 4 for ``2w-1, 2w``; for a loop at ``v`` only 1, 2
    are used.
    """

    edge_set: frozenset[OrderedEdge]
    is_loop: bool = False

    def place(self, v: int, w: int) -> frozenset[OrderedEdge]:
        if self.is_loop:
            if v != w:
                raise ValueError("loop pattern needs v == w")
            off = 2 * v - 2
            return frozenset(OrderedEdge(a + off, b + off) for a, b in self.edge_set)
        if not v < w:
            raise ValueError("edge pattern needs v < w")
        return frozenset(
            OrderedEdge(a + 2 * v - 2, b + 2 * w - 4) for a, b in self.edge_set
        )


def doubling_patterns(is_loop: bool = False) -> list[DoublingPattern]:
    if is_loop:
        cands = [OrderedEdge(1, 1), OrderedEdge(1, 2), OrderedEdge(2, 2)]
    else:
        cands = [OrderedEdge(a, b) for a in (1, 2) for b in (3, 4)]
    out = []
    for size in range(1, len(cands) + 1):
        for sub in itertools.combinations(cands, size):
            if any(is_nested(e, f) or is_nested(f, e) for e, f in itertools.combinations(sub, 2)):
                continue
            out.append(DoublingPattern(frozenset(sub), is_loop))
    return out


def quotient(g2: OrderedGraph) -> OrderedGraph:
    """Merge vertices 2v-1 and 2v into v; intra-pair edges become loops, parallel images collapse."""
    if g2.n % 2:
        raise ValueError(f"quotient needs an even vertex count, got {g2.n}")
    images = {OrderedEdge((u + 1) // 2, (v + 1) // 2) for u, v in g2.edges}
    return OrderedGraph(g2.n // 2, images)


def double(g: OrderedGraph, choice: dict[OrderedEdge, DoublingPattern]) -> OrderedGraph:
    edges: set[OrderedEdge] = set()
    for e in g.edges:
        pattern = choice[e]
        if pattern.is_loop != e.is_loop:
            raise ValueError(f"pattern kind does not match edge {tuple(e)}")
        edges |= pattern.place(e.left, e.right)
    return OrderedGraph(2 * g.n, edges)


def iter_doublings(g: OrderedGraph) -> Iterator[OrderedGraph]:
    """Every doubling of ``g`` (nesting between different quotient edges is not filtered)."""
    options = [doubling_patterns(e.is_loop) for e in g.edges]
    for combo in itertools.product(*options):
        yield double(g, dict(zip(g.edges, combo)))


def _pattern_of(g2_edges: Sequence[OrderedEdge], e: OrderedEdge) -> DoublingPattern:
    """Local pattern formed by the edges of a doubled graph that map onto ``e``."""
    v, w = e
    if e.is_loop:
        off = 2 * v - 2
        local = frozenset(OrderedEdge(a - off, b - off) for a, b in g2_edges)
    else:
        local = frozenset(OrderedEdge(a - 2 * v + 2, b - 2 * w + 4) for a, b in g2_edges)
    return DoublingPattern(local, e.is_loop)


@dataclass
class DoublingReport:
    n: int
    g_n: int
    g_2n: int
    bound: int
    recurrence_holds: bool
    roundtrip_ok: bool
    quotients_nesting_free: bool
    max_quotient_edges: int
    edges_bound_ok: bool
    explicit_coverage: bool | None = None
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.recurrence_holds
            and self.roundtrip_ok
            and self.quotients_nesting_free
            and self.edges_bound_ok
            and self.explicit_coverage is not False
        )


def verify_doubling(n: int, limit: int = ENUMERATION_LIMIT, explicit_limit: int = 2) -> DoublingReport:
    """Check the doubling argument exhaustively on ``2n`` vertices.

    For every queue on ``2n`` vertices: its quotient is a queue with at most
    ``2n - 1`` edges, and the edges over each quotient edge form one of the
    allowed patterns, so the graph is a doubling of its quotient. With
    ``n <= explicit_limit`` the doublings of every queue on ``n`` vertices are
    also generated outright and must cover all queues on ``2n`` vertices.
    """
    if n < 1:
        raise ValueError("n must be positive")
    _check_limit(2 * n, limit, "verify_doubling")
    g_n = enumerate_queues(n)
    g_2n = enumerate_queues(2 * n)
    bound = 11 ** (2 * n - 1) * g_n
    allowed = {False: {p.edge_set for p in doubling_patterns(False)},
               True: {p.edge_set for p in doubling_patterns(True)}}
    roundtrip = nesting_free = True
    max_q = 0
    bad: list[str] = []
    seen = 0
    for edges in iter_queues(2 * n, limit):
        seen += 1
        g2 = OrderedGraph(2 * n, edges)
        q = quotient(g2)
        max_q = max(max_q, q.m)
        if not _edges_nesting_free(q.edges):
            nesting_free = False
            bad.append(f"quotient-not-queue {list(map(tuple, edges))}")
        over: dict[OrderedEdge, list[OrderedEdge]] = defaultdict(list)
        for u, v in edges:
            over[OrderedEdge((u + 1) // 2, (v + 1) // 2)].append(OrderedEdge(u, v))
        for e, group in over.items():
            if _pattern_of(group, e).edge_set not in allowed[e.is_loop]:
                roundtrip = False
                bad.append(f"no-pattern {tuple(e)} <- {list(map(tuple, group))}")
    explicit = None
    if n <= explicit_limit:
        produced = set()
        for edges in iter_queues(n, limit):
            for g2 in iter_doublings(OrderedGraph(n, edges)):
                if _edges_nesting_free(g2.edges):
                    produced.add(g2.edges)
        explicit = len(produced) == g_2n == seen
        if not explicit:
            bad.append(f"explicit-coverage produced={len(produced)} g(2n)={g_2n}")
    return DoublingReport(
        n=n,
        g_n=g_n,
        g_2n=g_2n,
        bound=bound,
        recurrence_holds=g_2n <= bound,
        roundtrip_ok=roundtrip and seen == g_2n,
        quotients_nesting_free=nesting_free,
        max_quotient_edges=max_q,
        edges_bound_ok=max_q <= 2 * n - 1,
        explicit_coverage=explicit,
        counterexamples=bad,
    )


def _edges_nesting_free(edges: Sequence[tuple[int, int]]) -> bool:
    # sorted by left; a nested pair exists iff some later-left edge ends strictly earlier
    ordered = sorted(edges)
    for i, e in enumerate(ordered):
        for f in ordered[i + 1:]:
            if is_nested(e, f):
                return False
    return True


def max_queue_edges(n: int, limit: int = ENUMERATION_LIMIT) -> tuple[int, tuple[OrderedEdge, ...]]:
    """Largest queue on ``n`` vertices.

    The witness is the maximum queue of least total span (ties broken
    lexicographically): all loops plus the edges ``(i, i+1)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    best_key = None
    best: tuple[OrderedEdge, ...] = ()
    for edges in iter_queues(n, limit):
        key = (-len(edges), sum(v - u for u, v in edges), edges)
        if best_key is None or key < best_key:
            best_key, best = key, edges
    sums = [u + v for u, v in best]
    if len(best) > 2 * n - 1:
        raise AssertionError(f"queue with {len(best)} > 2n-1 edges: {best}")
    if len(set(sums)) != len(sums) or not all(2 <= s <= 2 * n for s in sums):
        raise AssertionError(f"witness edge sums not distinct in 2..2n: {sums}")
    return len(best), best


@lru_cache(maxsize=None)
def _labelled_qn(n: int) -> tuple[tuple[tuple[int, int], int], ...]:
    cands = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    hist: Counter = Counter()
    for mask in range(1 << len(cands)):
        edges = [cands[i] for i in range(len(cands)) if mask >> i & 1]
        res = exact_queue_number(LabelledGraph(n, edges))
        if not res.exact:
            raise RuntimeError(f"queue-number search hit its budget on {edges}")
        hist[(len(edges), res.queue_number)] += 1
    return tuple(sorted(hist.items()))


def labelled_qn_histogram(n: int, limit: int = LABELLED_LIMIT) -> dict[tuple[int, int], int]:
    """Map ``(m, q)`` to the number of labelled simple graphs with ``m`` edges and queue-number ``q``."""
    _check_limit(n, limit, "labelled_qn_histogram")
    return dict(_labelled_qn(n))


def count_labelled_qn_le(n: int, m: int, k: int, limit: int = LABELLED_LIMIT) -> int:
    """Labelled simple ``n``-vertex ``m``-edge graphs with queue-number at most ``k``.

    Raises AssertionError if the count exceeds ``n!`` times the number of
    ordered ``m``-edge graphs with no ``(k+1)``-edge rainbow.
    """
    hist = labelled_qn_histogram(n, limit)
    count = sum(c for (mm, q), c in hist.items() if mm == m and q <= k)
    ordered = count_kqueues(n, m, k, limit=max(limit, KQUEUE_LIMIT))
    if count > ordered * math.factorial(n):
        raise AssertionError(f"labelled count {count} > {ordered} * {n}!")
    return count


def count_labelled_regular(n: int, delta: int, limit: int = 8) -> int:
    """Labelled simple ``delta``-regular graphs on ``n`` vertices, by backtracking.

    The smallest vertex with missing degree picks all its remaining
    neighbours at once among larger vertices with spare degree.
    """
    _check_limit(n, limit, "count_labelled_regular")
    if delta < 0:
        raise ValueError("delta must be non-negative")
    if (n * delta) % 2 or (n > 0 and delta >= n):
        return 0
    need = [delta] * (n + 1)

    def walk(v: int) -> int:
        while v <= n and need[v] == 0:
            v += 1
        if v > n:
            return 1
        spare = [w for w in range(v + 1, n + 1) if need[w] > 0]
        total = 0
        k = need[v]
        for nbrs in itertools.combinations(spare, k):
            need[v] = 0
            for w in nbrs:
                need[w] -= 1
            total += walk(v + 1)
            for w in nbrs:
                need[w] += 1
            need[v] = k
        return total

    return walk(1)


def count_regular_by_pairings(n: int, delta: int, limit: int = 8) -> int:
    """Same count as :func:`count_labelled_regular`, via stub pairings.

    Counts perfect matchings of ``n * delta`` labelled stubs that create no
    loop and no repeated edge, then divides by ``(delta!)**n``, the number of
    matchings producing each simple graph.
    """
    _check_limit(n, limit, "count_regular_by_pairings")
    if (n * delta) % 2:
        return 0
    free = [delta] * (n + 1)
    adj = [set() for _ in range(n + 1)]

    def walk() -> int:
        v = next((u for u in range(1, n + 1) if free[u]), None)
        if v is None:
            return 1
        # the lowest free stub belongs to v; its partner may be any free stub of a new neighbour
        total = 0
        free[v] -= 1
        for w in range(1, n + 1):
            if w == v or free[w] == 0 or w in adj[v]:
                continue
            ways = free[w]
            free[w] -= 1
            adj[v].add(w)
            adj[w].add(v)
            total += ways * walk()
            adj[v].discard(w)
            adj[w].discard(v)
            free[w] += 1
        free[v] += 1
        return total

    pairings = walk()
    per_graph = math.factorial(delta) ** n
    if pairings % per_graph:
        raise AssertionError(f"{pairings} simple pairings not divisible by {per_graph}")
    return pairings // per_graph
