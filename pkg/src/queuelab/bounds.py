"""Closed-form counting bounds evaluated in natural-log space.

Everything here works with logarithms of the bounds so that parameters up to
``n ~ 10**6`` neither overflow nor lose the comparison. Where the quantities
are integers, exact big-integer cross-checks are used instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

__all__ = [
    "BoundRangeError",
    "BoundReport",
    "TOLERANCE",
    "CENSUS_NESTED_C",
    "CENSUS_RAINBOW_C",
    "log_factorial",
    "log_int",
    "compare_log",
    "regular_count_lower_bound_log",
    "kqueue_count_bound_log",
    "labelled_count_bound_log",
    "dujwoo_upper",
    "theorem_lower",
    "theorem_inequality",
    "solve_min_k",
    "binom_bound_check",
    "partition_count",
    "partition_count_check",
    "queue_count_bound",
    "queue_edges_count_bound",
]

TOLERANCE = 1e-9
# constants extracted from the counting arguments: g(n) <= 11^(2n), and the
# k-queue chain picks up a further factor e * 2 from the binomial and partition bounds
CENSUS_NESTED_C = 121
CENSUS_RAINBOW_C = 2 * math.e * 121


class BoundRangeError(ValueError):
    pass


@dataclass(frozen=True)
class BoundReport:
    """``lhs <= rhs`` judged on natural logs; holds iff the slack is at least minus the tolerance."""

    lhs_log: float
    rhs_log: float
    verdict: bool
    slack_log: float
    detail: dict = field(default_factory=dict, compare=False)


def compare_log(lhs_log: float, rhs_log: float, **detail) -> BoundReport:
    slack = rhs_log - lhs_log
    scale = max(1.0, abs(lhs_log), abs(rhs_log))
    return BoundReport(lhs_log, rhs_log, slack >= -TOLERANCE * scale, slack, detail)


def log_int(x: int) -> float:
    """Natural log of a positive integer of any size; -inf for 0."""
    if x < 0:
        raise ValueError("log of a negative count")
    return math.log(x) if x else -math.inf


@lru_cache(maxsize=64)
def log_factorial(n: int) -> float:
    if n < 0:
        raise ValueError("factorial of a negative number")
    if n > 10**6:
        return math.lgamma(n + 1)
    return math.fsum(math.log(i) for i in range(2, n + 1))


def regular_count_lower_bound_log(n: int, delta: int) -> float:
    """ln of (n / (3 delta)) ** (delta n / 2)."""
    if n < 1 or delta < 1:
        raise ValueError("need n >= 1 and delta >= 1")
    return delta * n / 2 * math.log(n / (3 * delta))


def _check_kqueue_range(n: int, m: int, k: int) -> None:
    if n < 1 or m < 1:
        raise BoundRangeError("need n >= 1 and m >= 1")
    # 2m/n <= k <= m, compared without division
    if not (2 * m <= k * n and k <= m):
        raise BoundRangeError(f"k={k} outside the range 2m/n <= k <= m for n={n}, m={m}")


def kqueue_count_bound_log(n: int, m: int, k: int, c: float) -> float:
    """ln of (c k n / m) ** (2m); only defined for 2m/n <= k <= m."""
    _check_kqueue_range(n, m, k)
    if c <= 0:
        raise ValueError("c must be positive")
    return 2 * m * math.log(c * k * n / m)


def labelled_count_bound_log(n: int, m: int, k: int, c: float) -> float:
    return kqueue_count_bound_log(n, m, k, c) + log_factorial(n)


def dujwoo_upper(n: int, delta: int) -> float:
    """e * sqrt(delta n / 2), the universal upper bound on queue-number for max degree delta."""
    if n < 1 or delta < 1:
        raise ValueError("need n >= 1 and delta >= 1")
    return math.e * math.sqrt(delta * n / 2)


def theorem_lower(n: int, delta: int, c: float = 1.0) -> float:
    """sqrt(delta) * n**(1/2 - 1/delta) / (sqrt(3) c)."""
    if delta < 3 or n < 1 or c <= 0:
        raise ValueError("need delta >= 3, n >= 1, c > 0")
    return math.sqrt(delta) * n ** (0.5 - 1 / delta) / (math.sqrt(3) * c)


def theorem_inequality(n: int, delta: int, k: int, c: float = 1.0, factorial: bool = False) -> BoundReport:
    """(n/3delta)^(delta n/2) <= (ck/delta)^(delta n) * n^n, or with n! in place of n^n."""
    lhs = regular_count_lower_bound_log(n, delta)
    tail = log_factorial(n) if factorial else n * math.log(n)
    rhs = delta * n * math.log(c * k / delta) + tail
    return compare_log(lhs, rhs, n=n, delta=delta, k=k, c=c, factorial=factorial)


def solve_min_k(n: int, delta: int, c: float = 1.0, factorial: bool = False) -> int:
    """Smallest positive integer k making :func:`theorem_inequality` hold.

    The right side grows with k, so the answer is found by doubling then
    bisection over integers.
    """
    if delta < 3 or n < 1 or c <= 0:
        raise ValueError("need delta >= 3, n >= 1, c > 0")

    def ok(k: int) -> bool:
        return theorem_inequality(n, delta, k, c, factorial).verdict

    if ok(1):
        return 1
    lo, hi = 1, 2
    while not ok(hi):
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


def binom_bound_check(n: int, t: int) -> BoundReport:
    """C(n, t) < (e n / t) ** t with the binomial computed exactly."""
    if not 1 <= t <= n:
        raise ValueError("need 1 <= t <= n")
    exact = math.comb(n, t)
    return compare_log(log_int(exact), t * (1 + math.log(n / t)), n=n, t=t, binom=exact)


def partition_count(m: int, k: int) -> int:
    """Multisets of k non-negative integers summing to m (partitions of m into at most k parts)."""
    if m < 0 or k < 0:
        raise ValueError("m and k must be non-negative")
    # ways[s] over parts of size 1..k: conjugation turns "at most k parts" into "parts <= k"
    ways = [1] + [0] * m
    for part in range(1, k + 1):
        for s in range(part, m + 1):
            ways[s] += ways[s - part]
    return ways[m]


def partition_count_check(m: int, k: int) -> BoundReport:
    """count <= C(k+m-1, m) < C(2m, m) < 2^(2m), each link checked exactly."""
    if not 1 <= k <= m:
        raise ValueError("need 1 <= k <= m")
    count = partition_count(m, k)
    a = math.comb(k + m - 1, m)
    b = math.comb(2 * m, m)
    top = 4**m
    chain = count <= a < b < top
    report = compare_log(log_int(count), log_int(top), m=m, k=k, partitions=count,
                         multiset_bound=a, central_binom=b, chain=chain)
    if not chain:
        return BoundReport(report.lhs_log, report.rhs_log, False, report.slack_log, report.detail)
    return report


def queue_count_bound(n: int) -> int:
    """121 ** n, the proof-extracted bound on the number of queues on n vertices."""
    return CENSUS_NESTED_C**n


def queue_edges_count_bound(n: int, m: int) -> int:
    """C(n, 2m) * 121^(2m) when m <= n/2, else 121^n."""
    if 2 * m <= n:
        return math.comb(n, 2 * m) * CENSUS_NESTED_C ** (2 * m)
    return CENSUS_NESTED_C**n
