import math
from collections import Counter

import pytest

from queuelab.core import LabelledGraph, format_graph
from queuelab.randreg import degree_check, gen_regular
from queuelab.rng import REFERENCE_OUTPUTS, REFERENCE_SEED, SplitMix64

from conftest import complete, cycle


def test_splitmix_reference_outputs():
    rng = SplitMix64(REFERENCE_SEED)
    assert tuple(rng.next_u64() for _ in range(5)) == REFERENCE_OUTPUTS


def test_below_range_and_rough_uniformity():
    rng = SplitMix64(1)
    counts = Counter(rng.below(6) for _ in range(60_000))
    assert set(counts) == set(range(6))
    for c in counts.values():
        assert abs(c - 10_000) < 5 * math.sqrt(60_000 * (1 / 6) * (5 / 6))
    with pytest.raises(ValueError):
        rng.below(0)


def test_below_rejects_low_residues():
    # for bound 3, 2**64 % 3 == 1, so a raw 0 must be redrawn
    class Fixed(SplitMix64):
        def __init__(self, outs):
            super().__init__(0)
            self.outs = list(outs)

        def next_u64(self):
            return self.outs.pop(0)

    assert Fixed([0, 5]).below(3) == 2


def test_shuffle_is_a_permutation():
    rng = SplitMix64(9)
    xs = list(range(50))
    rng.shuffle(xs)
    assert sorted(xs) == list(range(50)) and xs != list(range(50))


def test_k4_is_the_only_outcome():
    for seed in range(20):
        assert gen_regular(4, 3, seed).graph == complete(4)


def test_parity_and_range_errors():
    with pytest.raises(ValueError):
        gen_regular(5, 3, 0)
    with pytest.raises(ValueError):
        gen_regular(4, 4, 0)


def test_rejection_cap():
    with pytest.raises(RuntimeError):
        gen_regular(40, 9, 0, max_attempts=1)


def test_seed_42_golden():
    s = gen_regular(6, 3, 42)
    assert degree_check(s.graph, 3)
    assert s.graph.edges == ((1, 2), (1, 3), (1, 6), (2, 3), (2, 5), (3, 4), (4, 5), (4, 6), (5, 6))
    assert s.rejections == 8


def test_deterministic():
    for seed in range(10):
        a, b = gen_regular(20, 3, seed), gen_regular(20, 3, seed)
        assert format_graph(a.graph) == format_graph(b.graph) and a.rejections == b.rejections


def test_degree_check_examples():
    assert degree_check(complete(4), 3)
    assert not degree_check(LabelledGraph(3, [(1, 2), (2, 3)]), 2)
    assert degree_check(cycle(6), 2)
    assert not degree_check(LabelledGraph(2, [(1, 1), (2, 2)], simple=False), 2)


@pytest.mark.parametrize("n, d", [(10, 3), (12, 4), (30, 3), (9, 4), (50, 5)])
def test_samples_are_regular(n, d):
    for seed in range(5):
        assert degree_check(gen_regular(n, d, seed).graph, d)


def has_triangle(g):
    return any(g.neighbors(u) & g.neighbors(v) for u, v in g.edges)


def test_uniform_over_labelled_cubic_graphs_on_six_vertices():
    # 70 labelled cubic graphs: 60 triangular prisms and 10 copies of K3,3
    n_samples = 10_000
    k33 = sum(not has_triangle(gen_regular(6, 3, s).graph) for s in range(n_samples))
    p = 10 / 70
    sigma = math.sqrt(n_samples * p * (1 - p))
    assert abs(k33 - n_samples * p) <= 5 * sigma
