import itertools
import random

import pytest

from queuelab.core import LabelledGraph, OrderedGraph
from queuelab.oracles import all_candidate_edges


def all_ordered_graphs(n):
    cands = all_candidate_edges(n)
    for mask in range(1 << len(cands)):
        yield OrderedGraph(n, [cands[i] for i in range(len(cands)) if mask >> i & 1])


def all_simple_graphs(n):
    cands = all_candidate_edges(n, loops=False)
    for mask in range(1 << len(cands)):
        yield LabelledGraph(n, [cands[i] for i in range(len(cands)) if mask >> i & 1])


def complete(n):
    return LabelledGraph(n, list(itertools.combinations(range(1, n + 1), 2)))


def cycle(n):
    return LabelledGraph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def random_ordered(rng, n, p=0.5):
    return OrderedGraph(n, [e for e in all_candidate_edges(n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(12345)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
