"""
The counting chain behind the lower bound
=========================================

More regular graphs exist than graphs of small queue-number. Everything is
evaluated in log-space; the constant c stays explicit.
"""

import math

from queuelab import bounds
from queuelab.experiment import run_experiment

delta = 3
for n in (10**2, 10**3, 10**4, 10**5):
    print(
        f"n={n:>6}  closed form {bounds.theorem_lower(n, delta):8.3f}"
        f"  smallest k {bounds.solve_min_k(n, delta):4d}"
        f"  with n! {bounds.solve_min_k(n, delta, factorial=True):4d}"
        f"  upper {bounds.dujwoo_upper(n, delta):9.2f}"
    )

###############################################################################
# The side inequalities of the proof, checked exactly.

print(bounds.binom_bound_check(40, 7))
print(bounds.partition_count_check(12, 5))

###############################################################################
# Small random cubic graphs sit far below the universal upper bound.

for row in run_experiment(3, [8, 10, 12], samples=3, seed=1):
    print(row.n, row.queue_number, round(row.theorem_lower, 3), math.ceil(row.dujwoo_upper))
