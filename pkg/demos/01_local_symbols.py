"""
Local symbols and sums of two squares
=====================================

A nonzero rational c is a sum of two squares in Q_v exactly when the
symbol (c, -1)_v is +1.  This walk-through evaluates the symbol at a few
places and checks that the product over all places is 1.
"""

from fractions import Fraction

from brauer_zk.arith import factorize, is_sum_of_two_squares
from brauer_zk.hilbert import REAL, Place, bad_places, hilbert_neg_one

# 21 = 3 * 7 is not a sum of two squares: both 3 and 7 are 3 mod 4
for c in (21, 25, 6, -4, Fraction(7, 3)):
    print(f"c = {c}")
    for v in [REAL, Place(2), Place(3), Place(7)]:
        print(f"  ({c}, -1) at {v}: {hilbert_neg_one(c, v):+d}")
    print(f"  places with symbol -1: {[str(v) for v in bad_places(c)]}")

# the symbol is -1 at an even number of places, so the product is 1
for c in range(1, 40):
    primes = {2} | set(factorize(c).primes())
    signs = [hilbert_neg_one(c, REAL)] + [hilbert_neg_one(c, p) for p in primes]
    product = 1
    for s in signs:
        product *= s
    assert product == 1

# and for positive integers, +1 everywhere means a sum of two squares
print([c for c in range(1, 40) if is_sum_of_two_squares(c)])
