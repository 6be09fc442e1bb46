"""
Random regular graphs
=====================

Uniform simple regular graphs from the pairing model with rejection, driven
by SplitMix64 so every sample is reproducible from its seed.
"""

from collections import Counter

from queuelab import census, gen_regular
from queuelab.layout import exact_queue_number

s = gen_regular(10, 3, seed=42)
print("edges:", s.graph.edges, "rejected pairings:", s.rejections)

###############################################################################
# On six vertices there are 70 labelled cubic graphs: 60 prisms, 10 K3,3.

print("exact count:", census.count_labelled_regular(6, 3), census.count_regular_by_pairings(6, 3))
kinds = Counter(
    "prism" if any(g.neighbors(u) & g.neighbors(v) for u, v in g.edges) else "K3,3"
    for g in (gen_regular(6, 3, seed).graph for seed in range(7000))
)
print(kinds, "expected K3,3 share", 1 / 7)

###############################################################################
# Exact queue-numbers of a few cubic graphs.

for n in (8, 10, 12):
    print(n, [exact_queue_number(gen_regular(n, 3, seed).graph).queue_number for seed in range(3)])
