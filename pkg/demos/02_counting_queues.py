"""
Counting queues exactly
=======================

g(n) counts nesting-free ordered graphs on n vertices (loops allowed). The
doubling argument bounds g(2n) by 11^(2n-1) g(n); here both sides are exact.
"""

from queuelab import census

for n in range(1, 7):
    print(f"g({n}) = {census.enumerate_queues(n):>6}   121^n = {121 ** n}")

###############################################################################
# The eleven ways to double one edge, and the seven ways to double a loop.

print(len(census.doubling_patterns()), "edge patterns,", len(census.doubling_patterns(True)), "loop patterns")

###############################################################################
# Every queue on 2n vertices is a doubling of its quotient.

for n in (1, 2, 3):
    rep = census.verify_doubling(n)
    print(f"n={n}: g(2n)={rep.g_2n} <= {rep.bound}  roundtrip={rep.roundtrip_ok} max quotient edges={rep.max_quotient_edges}")

###############################################################################
# A queue never has more than 2n - 1 edges; the extremal one is loops plus a path.

for n in range(1, 6):
    m, witness = census.max_queue_edges(n)
    print(n, m, [u + v for u, v in witness])

###############################################################################
# k-queues by edge count, from the profile sweep.

n = 5
for m in range(0, 16, 3):
    print(f"m={m:2d}", [census.count_kqueues(n, m, k) for k in range(1, 5)])
