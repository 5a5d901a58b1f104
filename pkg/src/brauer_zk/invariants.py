"""Closed-form local invariant sets and obstruction criteria.

For ``x**2 + y**2 + z**(a*b) = n**a`` the quaternion algebra
``(n - z**b, -1)`` takes local invariants in {0, 1/2}.  The set ``I_v`` of
values attained on v-adic integral points is known in closed form in many
cases; this module applies those rules and reports how complete the answer
is.  Nothing in :mod:`brauer_zk.decide` depends on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import factorize, integer_nth_root, is_sum_of_two_squares, vp_rp
from .hilbert import HALF, REAL, ZERO, Place, PlaceLike

__all__ = [
    "EXACT",
    "LOWER_BOUND",
    "NOT_COVERED",
    "InvariantSet",
    "invariant_set",
    "invariant_sets",
    "small_root_search",
    "check_jagy_obstruction",
    "check_strong_approx_failure",
    "check_abthm",
    "NOT_6_MOD_8_WITNESS",
]

EXACT = "exact"
LOWER_BOUND = "lower-bound"
NOT_COVERED = "not-covered"

# n mod 8 -> z with r_2(n**a - z**(a*b)) = r_2(n - z**b) = 1 mod 4 (a, b odd)
NOT_6_MOD_8_WITNESS = {0: -1, 1: 0, 2: 0, 3: 1, 4: -1, 5: 3, 7: 5}


@dataclass(frozen=True)
class InvariantSet:
    place: Place
    values: frozenset[Fraction]
    status: str
    reason: str = ""

    def __str__(self) -> str:
        vals = ",".join(str(v) for v in sorted(self.values))
        return f"{self.place}:{{{vals}}} {self.status}"


def _result(v: Place, values, status: str, reason: str) -> InvariantSet:
    return InvariantSet(v, frozenset(values), status, reason)


def _check_standing(a: int, b: int, n: int) -> None:
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    if n == 0:
        raise ValueError("n must be nonzero")
    if n < 0 and (a * b) % 2 == 0:
        raise ValueError("need n > 0 or a*b odd")


def _place_2(a: int, b: int, n: int, v: Place) -> InvariantSet:
    v2, r2 = vp_rp(n, 2).valuation, vp_rp(n, 2).unit
    unit_ok = pow(r2, a, 4) == 1
    if a >= 2 and unit_ok and (v2 + 1) % b == 0:
        return _result(v, {ZERO, HALF}, EXACT, "z=0 and z=2^((v2(n)+1)/b) give both values")
    if a % 2 == 1 and b % 2 == 1:
        if a == 1:
            return _result(v, {ZERO}, EXACT, "a=1: both symbols agree")
        if n % 8 == 6:
            if b >= 3:
                return _result(v, {HALF}, EXACT, "n = 6 mod 8 with a, b >= 3 odd")
            return _result(v, {HALF}, LOWER_BOUND, "n = 6 mod 8, z=-1 gives 1/2")
        return _result(v, {ZERO}, LOWER_BOUND, "n != 6 mod 8, tabulated z gives 0")
    if unit_ok:
        return _result(v, set(), NOT_COVERED, "z=0 is a 2-adic point; its invariant is not pinned")
    return _result(v, set(), NOT_COVERED, "no rule applies")


def _place_odd(a: int, b: int, n: int, v: Place) -> InvariantSet:
    p = v.prime
    if p % 4 == 1:
        return _result(v, {ZERO}, EXACT, "p = 1 mod 4: every symbol is +1")
    vp = vp_rp(n, p).valuation
    if a % 2 == 0:
        if vp % 2 == 1:
            return _result(v, {ZERO, HALF}, EXACT, "a even and v_p(n) odd")
        return _result(v, {ZERO}, LOWER_BOUND, "z=0 or z=1 gives 0")
    if b % 2 == 0:
        return _result(v, {ZERO}, LOWER_BOUND, "z=0 or z=1 gives 0")
    if (a * n) % p != 0:
        return _result(v, {ZERO}, EXACT, "p does not divide a*n")
    if vp % b != 0:
        return _result(v, {ZERO}, EXACT, "b does not divide v_p(n)")
    if (a * b) % p != 0:
        if vp % 2 == 1 and small_root_search(p, a, b, n) is not None:
            return _result(v, {ZERO, HALF}, EXACT, "small root exists with v_p(n) odd")
        return _result(v, {ZERO}, EXACT, "p does not divide a*b, no half-invariant")
    return _result(v, {ZERO}, LOWER_BOUND, "p divides a*b and b | v_p(n)")


def invariant_set(a: int, b: int, n: int, v: PlaceLike) -> InvariantSet:
    """``I_v(a, b, n)`` as far as the closed-form rules determine it."""
    _check_standing(a, b, n)
    v = v if isinstance(v, Place) else Place(v)
    if v.is_real:
        return _result(v, {ZERO}, EXACT, "n - z^b > 0 on real points")
    if v.prime == 2:
        return _place_2(a, b, n, v)
    return _place_odd(a, b, n, v)


def invariant_sets(a: int, b: int, n: int) -> list[InvariantSet]:
    """``I_v`` for v = infinity, 2 and every odd prime dividing a*b*n."""
    primes = sorted(set([2] + factorize(a * b * n).primes()))
    return [invariant_set(a, b, n, REAL)] + [invariant_set(a, b, n, p) for p in primes]


def small_root_search(p: int, a: int, b: int, n: int) -> int | None:
    """Least z' in [0, p) with ``p | sum_i r_p(n)**(a-1-i) * z'**(i*b)``."""
    r = vp_rp(n, p).unit % p
    for z in range(p):
        zb = pow(z, b, p)
        if sum(pow(r, a - 1 - i, p) * pow(zb, i, p) for i in range(a)) % p == 0:
            return z
    return None


def check_jagy_obstruction(a: int, b: int, n: int) -> bool:
    """True when the equation with ``m = n**a`` has local points but no integral ones."""
    if a < 3 or b < 3 or a % 2 == 0 or b % 2 == 0:
        raise ValueError("a and b must be odd and at least 3")
    if n % 8 != 6:
        return False
    for p in factorize(a * n).primes():
        if p % 4 == 3 and vp_rp(n, p).valuation % b == 0:
            return False
    return True


def check_strong_approx_failure(a: int, b: int, n: int) -> bool:
    """True when strong approximation at z away from infinity provably fails."""
    _check_standing(a, b, n)
    v2 = vp_rp(n, 2)
    if a >= 2 and pow(v2.unit, a, 4) == 1 and (v2.valuation + 1) % b == 0:
        return True
    return n > 0 and a % 2 == 0 and not is_sum_of_two_squares(n)


def _ab_bullet(m: int, a: int, b: int) -> bool:
    # True when the bullet holds, i.e. no obstructing n exists for this order
    n = integer_nth_root(m, a)
    if n is None or n % 8 != 6:
        return True
    for p in factorize(n).primes():
        if p % 4 != 3:
            continue
        vp = vp_rp(n, p).valuation
        if vp % b != 0 or vp % 2 == 0 or small_root_search(p, a, b, n) is None:
            continue
        return True
    return False


def check_abthm(a: int, b: int, m: int) -> bool:
    """Solvability criterion for ``k = a*b`` with primes ``a, b = 1 mod 4``.

    Returns False exactly when an obstruction is present; True means an
    integral solution exists under Schinzel's hypothesis (H).
    """
    from .arith import is_probable_prime

    for q in (a, b):
        if not is_probable_prime(q) or q % 4 != 1:
            raise ValueError(f"{q} is not a prime congruent to 1 mod 4")
    if m == 0:
        raise ValueError("m must be nonzero")
    return _ab_bullet(m, a, b) and _ab_bullet(m, b, a)
