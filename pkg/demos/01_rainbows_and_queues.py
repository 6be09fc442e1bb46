"""
Rainbows and the depth partition
================================

An ordered graph splits into k queues exactly when it has no rainbow of
k + 1 pairwise nested edges. Giving every edge its nesting depth as queue
index achieves that number.
"""

from queuelab import OrderedGraph, greedy_partition, max_rainbow, nesting_depth, validate_assignment

g = OrderedGraph(7, [(1, 7), (1, 4), (2, 6), (2, 3), (3, 5), (4, 4), (5, 6)])

size, cert = max_rainbow(g)
print("largest rainbow:", size, [tuple(e) for e in cert.edges])

###############################################################################
# Depth of an edge = 1 + largest rainbow strictly inside it.

for edge, d in sorted(nesting_depth(g).items()):
    print(f"  {tuple(edge)} depth {d}")

###############################################################################
# Queue i collects the edges of depth i; no queue contains a nested pair.

a = greedy_partition(g)
for q, members in a.queues().items():
    print(f"queue {q}:", [tuple(e) for e in members])
print("valid:", validate_assignment(a))
