import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from queuelab import bounds


def test_regular_lower_bound_examples():
    assert bounds.regular_count_lower_bound_log(6, 3) == pytest.approx(9 * math.log(2 / 3))
    assert math.exp(bounds.regular_count_lower_bound_log(6, 3)) == pytest.approx(0.02601, abs=1e-5)
    assert bounds.regular_count_lower_bound_log(12, 4) == 0
    assert bounds.regular_count_lower_bound_log(1000, 3) == pytest.approx(1500 * math.log(1000 / 9))


def test_regular_lower_bound_matches_exact_rational():
    for n in range(1, 21):
        for d in range(1, 6):
            if n * d % 2:
                continue
            exact = Fraction(n, 3 * d) ** (n * d // 2)
            want = math.log(exact.numerator) - math.log(exact.denominator)
            got = bounds.regular_count_lower_bound_log(n, d)
            assert got == pytest.approx(want, rel=1e-12, abs=1e-12)


def test_kqueue_bound_examples():
    c = bounds.CENSUS_RAINBOW_C
    for n, m in [(4, 4), (6, 9), (10, 5)]:
        k = 2 * m // n
        assert bounds.kqueue_count_bound_log(n, m, k, c) == pytest.approx(2 * m * math.log(2 * c))
    assert bounds.kqueue_count_bound_log(4, 4, 2, c) == pytest.approx(8 * math.log(2 * 2 * math.e * 121))
    with pytest.raises(bounds.BoundRangeError):
        bounds.kqueue_count_bound_log(4, 4, 1, c)
    with pytest.raises(bounds.BoundRangeError):
        bounds.kqueue_count_bound_log(10, 3, 4, c)


def test_labelled_bound_examples():
    c = bounds.CENSUS_RAINBOW_C
    # n = 1 admits no k in 2m/n <= k <= m; the n! term itself vanishes
    assert bounds.log_factorial(1) == 0
    with pytest.raises(bounds.BoundRangeError):
        bounds.labelled_count_bound_log(1, 1, 1, 3.0)
    assert bounds.labelled_count_bound_log(4, 4, 2, c) - bounds.kqueue_count_bound_log(4, 4, 2, c) == pytest.approx(math.log(24))
    delta = bounds.labelled_count_bound_log(10, 5, 1, c) - bounds.kqueue_count_bound_log(10, 5, 1, c)
    assert delta == pytest.approx(math.log(3628800)) and delta == pytest.approx(15.104, abs=1e-3)


def test_log_factorial():
    for n in range(0, 200):
        assert bounds.log_factorial(n) == pytest.approx(math.log(math.factorial(n)), rel=1e-12, abs=1e-12)
    assert bounds.log_factorial(2 * 10**6) == pytest.approx(math.lgamma(2 * 10**6 + 1))


def test_dujwoo_examples():
    assert bounds.dujwoo_upper(100, 3) == pytest.approx(math.e * math.sqrt(150))
    assert bounds.dujwoo_upper(100, 3) == pytest.approx(33.29, abs=5e-3)
    assert bounds.dujwoo_upper(2, 1) == pytest.approx(math.e)
    assert bounds.dujwoo_upper(8, 2) == pytest.approx(7.689, abs=1e-3)


def test_theorem_lower_examples():
    assert bounds.theorem_lower(n=1000, delta=3, c=1) == pytest.approx(1000 ** (1 / 6), rel=1e-9)
    assert bounds.theorem_lower(n=1000, delta=3, c=1) == pytest.approx(math.sqrt(10), rel=1e-9)
    assert bounds.theorem_lower(n=1, delta=3, c=1) == pytest.approx(1)
    assert bounds.theorem_lower(n=256, delta=4, c=1) == pytest.approx(8 / math.sqrt(3))


def test_solve_min_k_examples():
    assert bounds.solve_min_k(1000, 3, 1) == 4
    assert bounds.solve_min_k(1, 3, 1) == 1


@given(st.integers(1, 20000), st.sampled_from([3, 4, 5, 6, 10]), st.sampled_from([0.5, 1.0, 3.0, 121.0]))
def test_solve_min_k_is_the_threshold(n, d, c):
    k = bounds.solve_min_k(n, d, c)
    assert bounds.theorem_inequality(n, d, k, c).verdict
    if k > 1:
        assert not bounds.theorem_inequality(n, d, k - 1, c).verdict
    assert k >= math.floor(bounds.theorem_lower(n, d, c)) - 1
    assert k <= max(1, math.ceil(bounds.theorem_lower(n, d, c) * (1 + 1e-9)))


def test_factorial_variant_needs_at_least_as_many_queues():
    for n in (10, 100, 1000, 5000):
        for d in (3, 4, 5):
            assert bounds.solve_min_k(n, d, 1, factorial=True) >= bounds.solve_min_k(n, d, 1)
            k = bounds.solve_min_k(n, d, 1, factorial=True)
            assert bounds.theorem_inequality(n, d, k, 1, factorial=True).verdict


def test_theorem_grid():
    for d in (3, 4, 5, 10):
        for n in (100, 1000, 10000):
            for c in (1, 121):
                k = bounds.solve_min_k(n, d, c)
                t = bounds.theorem_lower(n, d, c)
                assert abs(k - t) <= 1 + 1e-6 * t


def test_monotonicity_in_n():
    for d in (3, 4, 5):
        lows = [bounds.theorem_lower(n, d) for n in range(1, 3000)]
        assert all(a < b for a, b in zip(lows, lows[1:]))
        ks = [bounds.solve_min_k(n, d) for n in range(3 * d, 3000)]
        assert all(a <= b for a, b in zip(ks, ks[1:]))


def test_binom_bound_examples():
    r = bounds.binom_bound_check(10, 3)
    assert r.verdict and r.detail["binom"] == 120
    assert math.exp(r.rhs_log) == pytest.approx((10 * math.e / 3) ** 3)
    assert math.exp(r.rhs_log) == pytest.approx(743.9, abs=0.1)
    assert bounds.binom_bound_check(7, 7).verdict
    for n in range(1, 61):
        for t in range(1, n + 1):
            r = bounds.binom_bound_check(n, t)
            assert r.verdict and r.slack_log > 0


def _brute_partitions(m, k):
    return sum(1 for combo in __import__("itertools").combinations_with_replacement(range(m + 1), k) if sum(combo) == m)


def test_partition_count_against_enumeration():
    for m in range(0, 10):
        for k in range(1, 6):
            assert bounds.partition_count(m, k) == _brute_partitions(m, k)


def test_partition_count_check_examples():
    r = bounds.partition_count_check(4, 2)
    assert r.detail["partitions"] == 3 and r.detail["multiset_bound"] == 5 and r.detail["central_binom"] == 70
    assert r.verdict and math.exp(r.rhs_log) == pytest.approx(256)
    r = bounds.partition_count_check(1, 1)
    assert r.verdict and r.detail["partitions"] == 1 and r.detail["central_binom"] == 2
    for m in range(1, 13):
        for k in range(1, m + 1):
            assert bounds.partition_count_check(m, k).verdict
    with pytest.raises(ValueError):
        bounds.partition_count_check(3, 4)


def test_compare_log_tolerance():
    assert bounds.compare_log(1.0, 1.0 - 1e-12).verdict
    assert not bounds.compare_log(1.0, 0.999).verdict
    assert bounds.compare_log(-math.inf, 0.0).verdict


def test_integer_bounds():
    assert bounds.queue_count_bound(3) == 121**3
    assert bounds.queue_edges_count_bound(5, 2) == math.comb(5, 4) * 121**4
    assert bounds.queue_edges_count_bound(5, 3) == 121**5
