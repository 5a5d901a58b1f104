"""
Closed-form detectors and the brute-force check
===============================================

Besides the search, some obstructions follow from congruence conditions
on n alone.  Here we compare the closed-form detectors with the search,
then look for explicit solutions where the search allows them.
"""

from brauer_zk.decide import ispossible
from brauer_zk.invariants import check_abthm, check_jagy_obstruction, invariant_sets
from brauer_zk.oracle import witness_search

# n = 6q with q = 1 mod 4 prime: no solution for k = 9
for q in (5, 13, 17, 29):
    n = 6 * q
    print(f"n={n}: detector {check_jagy_obstruction(3, 3, n)}, "
          f"search verdict {ispossible(9, n**3).verdict}")

# the local invariant sets behind the detector
for s in invariant_sets(3, 3, 30):
    print(f"  {s}  ({s.reason})")

# for k = 25 a second criterion applies; it agrees with the search
for n in (6, 10, 14, 18, 22):
    print(f"m={n}^5: criterion {check_abthm(5, 5, n**5)}, search {ispossible(25, n**5).verdict}")

# 14**3 is not obstructed for k = 9, and a small solution exists
print("k=9, m=2744:", ispossible(9, 2744).hypothesis, witness_search(9, 2744, 1000))

# 216 is obstructed, so no witness turns up within the bound
print("k=9, m=216:", witness_search(9, 216, 1000))
