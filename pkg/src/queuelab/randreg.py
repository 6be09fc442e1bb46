"""Seeded uniform random simple regular graphs (pairing model with rejection).

Each attempt shuffles the ``n * delta`` degree stubs with :class:`SplitMix64`
and pairs them off consecutively, which is a uniform perfect matching. An
attempt producing a loop or a repeated edge is discarded. Every simple graph
arises from exactly ``(delta!)**n`` matchings, so the accepted graph is uniform
over labelled simple ``delta``-regular graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LabelledGraph
from .rng import SplitMix64

__all__ = ["RegularSample", "gen_regular", "degree_check", "DEFAULT_MAX_ATTEMPTS"]

DEFAULT_MAX_ATTEMPTS = 10**6


@dataclass(frozen=True)
class RegularSample:
    n: int
    delta: int
    seed: int
    graph: LabelledGraph
    rejections: int


def gen_regular(n: int, delta: int, seed: int, max_attempts: int = DEFAULT_MAX_ATTEMPTS) -> RegularSample:
    if n < 1 or delta < 0:
        raise ValueError("need n >= 1 and delta >= 0")
    if (n * delta) % 2:
        raise ValueError(f"n * delta = {n * delta} is odd; no {delta}-regular graph on {n} vertices")
    if delta >= n:
        raise ValueError(f"delta = {delta} must be smaller than n = {n}")
    rng = SplitMix64(seed)
    base = [v for v in range(1, n + 1) for _ in range(delta)]
    for attempt in range(max_attempts):
        stubs = list(base)
        rng.shuffle(stubs)
        edges = set()
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                break
            e = (u, v) if u < v else (v, u)
            if e in edges:
                break
            edges.add(e)
        else:
            return RegularSample(n, delta, seed, LabelledGraph(n, sorted(edges)), attempt)
    raise RuntimeError(
        f"no simple pairing after {max_attempts} attempts for n={n}, delta={delta}; "
        "parameters are outside the practical range of the rejection sampler"
    )


def degree_check(g: LabelledGraph, delta: int) -> bool:
    """True iff ``g`` is simple and every vertex has degree exactly ``delta``."""
    if any(u == v for u, v in g.edges):
        return False
    return g.is_regular(delta)
