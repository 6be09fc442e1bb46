"""Exhaustive small-scale checks of every counting lemma, run as one suite."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Callable, Iterator

from . import bounds, census
from .core import OrderedGraph
from .oracles import all_candidate_edges, brute_min_partition
from .rainbow import greedy_partition, max_rainbow, validate_assignment

__all__ = ["CheckResult", "verify_lemmas", "CHECKS", "rainbow_corpus", "size_profiles"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    counterexample: str | None = None


def rainbow_corpus(max_exhaustive: int = 4, sample_n: int = 5, samples: int = 2000,
                   seed: int = 2006) -> Iterator[OrderedGraph]:
    """Every ordered graph on n <= ``max_exhaustive`` vertices, then a random sample at ``sample_n``."""
    for n in range(1, max_exhaustive + 1):
        cands = all_candidate_edges(n)
        for mask in range(1 << len(cands)):
            yield OrderedGraph(n, [cands[i] for i in range(len(cands)) if mask >> i & 1])
    if samples and sample_n:
        rng = random.Random(seed)
        cands = all_candidate_edges(sample_n)
        for _ in range(samples):
            yield OrderedGraph(sample_n, [e for e in cands if rng.random() < 0.5])


def check_rainbow(max_n: int) -> CheckResult:
    count = 0
    for g in rainbow_corpus(min(max_n, 4), sample_n=5 if max_n >= 5 else 0, samples=2000):
        count += 1
        size, cert = max_rainbow(g)
        a = greedy_partition(g)
        if not cert.is_valid() or len(cert) != size:
            return CheckResult("rainbow", False, "bad certificate", f"{list(g.edges)}")
        if brute_min_partition(list(g.edges)) != size:
            return CheckResult("rainbow", False, "min partition != max rainbow", f"{list(g.edges)}")
        if not validate_assignment(a) or a.k != size:
            return CheckResult("rainbow", False, "greedy partition invalid", f"{list(g.edges)}")
    return CheckResult("rainbow", True, f"{count} ordered graphs: min partition = max rainbow, greedy valid")


def check_max_edges(max_n: int) -> CheckResult:
    found = []
    for n in range(1, min(max_n, census.ENUMERATION_LIMIT) + 1):
        m, witness = census.max_queue_edges(n)
        found.append(m)
        if m != 2 * n - 1:
            return CheckResult("max-edges", False, f"n={n}: max {m} != {2 * n - 1}", f"n={n} m={m}")
    return CheckResult("max-edges", True, f"max queue edges {found} = 2n-1")


def check_patterns(max_n: int) -> CheckResult:
    plain = census.doubling_patterns(False)
    loop = census.doubling_patterns(True)
    cands = [(1, 3), (1, 4), (2, 3), (2, 4)]
    nonempty = [s for r in range(1, 5) for s in itertools.combinations(cands, r)]
    with_pair = [s for s in nonempty if (1, 4) in s and (2, 3) in s]
    ok = len(plain) == 11 == len(nonempty) - len(with_pair) and len(with_pair) == 4 and len(loop) == 7
    return CheckResult("doubling-patterns", ok, f"{len(plain)} edge patterns (15 - {len(with_pair)}), {len(loop)} loop patterns",
                       None if ok else f"plain={len(plain)} loop={len(loop)}")


def check_doubling(max_n: int) -> CheckResult:
    details = []
    for n in range(1, min(max_n, census.ENUMERATION_LIMIT) // 2 + 1):
        rep = census.verify_doubling(n)
        details.append(f"g({2 * n})={rep.g_2n}<={rep.bound}")
        if not rep.ok:
            return CheckResult("doubling", False, "; ".join(details),
                               rep.counterexamples[0] if rep.counterexamples else f"n={n}")
    return CheckResult("doubling", True, ", ".join(details) or "no n in range")


def check_queue_counts(max_n: int) -> CheckResult:
    vals = []
    for n in range(1, min(max_n, census.ENUMERATION_LIMIT) + 1):
        g = census.enumerate_queues(n)
        vals.append(g)
        dp = sum(census.count_kqueues(n, m, 1) for m in range(n * (n + 1) // 2 + 1))
        if g != dp:
            return CheckResult("queue-count", False, "engines disagree", f"n={n} backtrack={g} dp={dp}")
        if g > bounds.queue_count_bound(n):
            return CheckResult("queue-count", False, "g(n) > 121^n", f"n={n} g={g}")
    return CheckResult("queue-count", True, f"g(n) = {vals} <= 121^n")


def check_edges_bound(max_n: int) -> CheckResult:
    checked = 0
    for n in range(1, min(max_n, census.ENUMERATION_LIMIT) + 1):
        for m in range(n * (n + 1) // 2 + 1):
            g = census.count_queues_by_edges(n, m)
            checked += 1
            if g > bounds.queue_edges_count_bound(n, m):
                return CheckResult("edges-bound", False, "g(n,m) above bound", f"n={n} m={m} g={g}")
            if census.count_kqueues(n, m, 1) != g:
                return CheckResult("edges-bound", False, "g(n,m,1) != g(n,m)", f"n={n} m={m}")
    return CheckResult("edges-bound", True, f"{checked} (n,m) pairs within the case-split bound")


def check_rainbow_edges_bound(max_n: int) -> CheckResult:
    checked = 0
    worst = math.inf
    for n in range(1, min(max_n, census.KQUEUE_LIMIT) + 1):
        for m in range(1, n * (n + 1) // 2 + 1):
            for k in range(1, m + 1):
                if 2 * m > k * n:
                    continue
                count = census.count_kqueues(n, m, k)
                rep = bounds.compare_log(bounds.log_int(count),
                                         bounds.kqueue_count_bound_log(n, m, k, bounds.CENSUS_RAINBOW_C))
                checked += 1
                worst = min(worst, rep.slack_log)
                if not rep.verdict:
                    return CheckResult("kqueue-bound", False, "g(n,m,k) above bound", f"n={n} m={m} k={k} g={count}")
    return CheckResult("kqueue-bound", True, f"{checked} (n,m,k) triples, least log-slack {worst:.3f}")


def size_profiles(m: int, k: int) -> Iterator[tuple[int, ...]]:
    """Non-decreasing k-tuples of non-negative integers summing to m."""
    def rec(rem, parts, lo):
        if parts == 1:
            if rem >= lo:
                yield (rem,)
            return
        for x in range(lo, rem // parts + 1):
            for rest in rec(rem - x, parts - 1, x):
                yield (x,) + rest
    yield from rec(m, k, 0)


def check_sizes_product(max_n: int) -> CheckResult:
    checked = 0
    for n in range(1, min(max_n, 3) + 1):
        top = n * (n + 1) // 2
        gm = census.queue_counts_by_edges(n)
        for m in range(top + 1):
            for k in range(1, 4):
                for sizes in size_profiles(m, k):
                    if max(sizes) > top:
                        continue
                    c = census.count_kqueues_with_sizes(n, sizes)
                    prod = math.prod(gm[s] for s in sizes)
                    checked += 1
                    if c > prod:
                        return CheckResult("sizes-product", False, "g(n;m_i) > prod g(n,m_i)", f"n={n} sizes={sizes}")
    return CheckResult("sizes-product", True, f"{checked} size profiles within the product bound")


def check_partitions(max_n: int) -> CheckResult:
    for m in range(1, 13):
        for k in range(1, m + 1):
            if not bounds.partition_count_check(m, k).verdict:
                return CheckResult("partitions", False, "chain fails", f"m={m} k={k}")
    for n in range(1, 61):
        for t in range(1, n + 1):
            if not bounds.binom_bound_check(n, t).verdict:
                return CheckResult("partitions", False, "binomial bound fails", f"n={n} t={t}")
    return CheckResult("partitions", True, "partition chain m<=12, binomial bound n<=60")


def check_labelled(max_n: int) -> CheckResult:
    checked = 0
    for n in range(2, min(max_n, 5) + 1):
        for m in range(1, n * (n - 1) // 2 + 1):
            for k in range(1, m + 1):
                count = census.count_labelled_qn_le(n, m, k)
                ordered = census.count_kqueues(n, m, k)
                if count > ordered * math.factorial(n):
                    return CheckResult("labelled", False, "count > ordered * n!", f"n={n} m={m} k={k}")
                if 2 * m <= k * n:
                    rep = bounds.compare_log(bounds.log_int(count),
                                             bounds.labelled_count_bound_log(n, m, k, bounds.CENSUS_RAINBOW_C))
                    if not rep.verdict:
                        return CheckResult("labelled", False, "count above closed form", f"n={n} m={m} k={k}")
                checked += 1
    return CheckResult("labelled", True, f"{checked} (n,m,k) labelled counts within both bounds")


def check_regular(max_n: int) -> CheckResult:
    notes = []
    for n in range(4, 9):
        a = census.count_labelled_regular(n, 3)
        b = census.count_regular_by_pairings(n, 3)
        if a != b:
            return CheckResult("regular", False, "two counts disagree", f"n={n} backtrack={a} pairings={b}")
        if a:
            holds = bounds.compare_log(bounds.regular_count_lower_bound_log(n, 3), bounds.log_int(a)).verdict
            notes.append(f"n={n}:{a}{'' if holds else '(below bound)'}")
    return CheckResult("regular", True, "cubic counts " + " ".join(notes))


def check_theorem(max_n: int) -> CheckResult:
    for delta in (3, 4, 5, 10):
        for n in (100, 1000, 10000):
            for c in (1, 121):
                k = bounds.solve_min_k(n, delta, c)
                t = bounds.theorem_lower(n, delta, c)
                if abs(k - math.ceil(t)) > 1:
                    return CheckResult("theorem", False, "solve_min_k far from closed form",
                                       f"delta={delta} n={n} c={c} k={k} closed={t}")
    return CheckResult("theorem", True, "solve_min_k within 1 of ceil(closed form) on the grid")


CHECKS: dict[str, Callable[[int], CheckResult]] = {
    "rainbow": check_rainbow,
    "max-edges": check_max_edges,
    "doubling-patterns": check_patterns,
    "doubling": check_doubling,
    "queue-count": check_queue_counts,
    "edges-bound": check_edges_bound,
    "kqueue-bound": check_rainbow_edges_bound,
    "sizes-product": check_sizes_product,
    "partitions": check_partitions,
    "labelled": check_labelled,
    "regular": check_regular,
    "theorem": check_theorem,
}


def verify_lemmas(max_n: int = 5, only: list[str] | None = None) -> list[CheckResult]:
    names = only or list(CHECKS)
    return [CHECKS[name](max_n) for name in names]
