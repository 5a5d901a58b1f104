"""
Listing obstructed m
====================

ispossible combines the per-prime subsets by symmetric difference.  When
the empty set can no longer be reached, m has no integral solution.  This
script lists all obstructed m <= 10**9 for a few k and prints them in n^a
notation.
"""

import time

from brauer_zk.arith import largest_power_divisor
from brauer_zk.decide import ispossible, table_generate

report = ispossible(9, 216)
print(f"k=9, m=216: verdict {report.verdict} ({report.hypothesis})")
for p, r in report.per_prime.items():
    print(f"  p={p}: {r.sorted_subsets()}")
print(f"  combined: {report.aggregate_subsets()}")

for k in (9, 25, 27, 49):
    start = time.perf_counter()
    values = table_generate(k, 10**9)
    seconds = time.perf_counter() - start
    shown = ", ".join("{1}^{0}".format(*largest_power_divisor(m, k)) for m in values)
    print(f"k={k} ({len(values)} values, {seconds:.1f}s): {shown}")

# only m = n**a with a > 1 dividing k can be obstructed; a full scan of
# every m agrees on a small range
assert table_generate(9, 30_000, mode="full-scan") == table_generate(9, 30_000)
