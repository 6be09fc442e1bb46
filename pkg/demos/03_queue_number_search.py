"""
Queue-number of abstract graphs
===============================

The queue-number minimises the largest rainbow over all vertex orderings.
Branch-and-bound handles small graphs exactly; a randomized search gives
upper bounds beyond that.
"""

import itertools

from queuelab import LabelledGraph, exact_queue_number, heuristic_queue_number

for n in range(2, 9):
    kn = LabelledGraph(n, list(itertools.combinations(range(1, n + 1), 2)))
    res = exact_queue_number(kn)
    print(f"K{n}: queue-number {res.queue_number} (exact={res.exact}, {res.nodes} nodes)")

###############################################################################
# The Petersen graph.

outer = [(i, i % 5 + 1) for i in range(1, 6)]
spokes = [(i, i + 5) for i in range(1, 6)]
inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
petersen = LabelledGraph(10, outer + spokes + inner)
res = exact_queue_number(petersen)
print("Petersen:", res.queue_number, "order", res.witness_order)

###############################################################################
# The heuristic only promises an upper bound.

print("heuristic:", heuristic_queue_number(petersen, restarts=50, seed=1).queue_number)
