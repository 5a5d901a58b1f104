"""Exact integer arithmetic: valuations, integer roots, factorization, two-square test."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint, integer_nthroot, isprime

__all__ = [
    "Factorization",
    "PAdicDecomposition",
    "vp_rp",
    "valuation",
    "unit_part",
    "is_probable_prime",
    "factorize",
    "prime_divisors",
    "divisors",
    "integer_nth_root",
    "largest_power_divisor",
    "is_sum_of_two_squares",
]

TRIAL_BOUND = 1 << 12


def _small_primes(bound: int) -> list[int]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


SMALL_PRIMES = _small_primes(TRIAL_BOUND)


@dataclass(frozen=True)
class PAdicDecomposition:
    """``value = p**valuation * unit`` with ``unit`` prime to ``p``."""

    p: int
    valuation: int
    unit: int


@dataclass(frozen=True)
class Factorization:
    value: int
    sign: int
    factors: tuple[tuple[int, int], ...]

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def product(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    def __str__(self) -> str:
        body = "·".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
        return ("-" if self.sign < 0 else "") + (body or "1")


def vp_rp(x: int, p: int) -> PAdicDecomposition:
    """Split ``x`` into its ``p``-adic valuation and unit part.

    Negative ``x`` keeps its sign in the unit part, so ``vp_rp(-45, 3)``
    gives valuation 2 and unit -5.
    """
    if x == 0:
        raise ValueError("valuation of zero undefined")
    if p < 2:
        raise ValueError(f"{p} is not a prime")
    v = 0
    if p == 2:
        v = (x & -x).bit_length() - 1
        return PAdicDecomposition(p, v, x >> v)
    while x % p == 0:
        x //= p
        v += 1
    return PAdicDecomposition(p, v, x)


def valuation(x: int, p: int) -> int:
    return vp_rp(x, p).valuation


def unit_part(x: int, p: int) -> int:
    return vp_rp(x, p).unit


def is_probable_prime(n: int) -> bool:
    """Baillie-PSW via sympy; no known counterexample, exact below 2**64."""
    return n >= 2 and bool(isprime(n))


@lru_cache(maxsize=4096)
def factorize(x: int) -> Factorization:
    """Complete prime factorization of a nonzero integer."""
    if x == 0:
        raise ValueError("cannot factorize zero")
    sign = -1 if x < 0 else 1
    found = factorint(abs(x))
    return Factorization(x, sign, tuple(sorted((int(p), int(e)) for p, e in found.items())))


def prime_divisors(x: int) -> list[int]:
    return factorize(x).primes()


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in ascending order."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def integer_nth_root(m: int, a: int) -> int | None:
    """The integer ``n`` with ``n**a == m`` for odd ``a``, or None."""
    if a < 1 or a % 2 == 0:
        raise ValueError(f"root degree must be odd and positive, got {a}")
    r, exact = integer_nthroot(abs(m), a)
    if not exact:
        return None
    r = int(r)
    return -r if m < 0 else r


def largest_power_divisor(m: int, k: int) -> tuple[int, int]:
    """Largest divisor ``a`` of odd ``k`` with ``m`` an ``a``-th power, and the root."""
    if m == 0:
        raise ValueError("m must be nonzero")
    for d in reversed(divisors(k)):
        n = integer_nth_root(m, d)
        if n is not None:
            return d, n
    raise AssertionError("unreachable: every m is a first power")


def is_sum_of_two_squares(m: int) -> bool:
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return True
    # strip small primes first; the cofactor often settles the answer cheaply
    for p in SMALL_PRIMES:
        if m % p:
            continue
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if p % 4 == 3 and e % 2:
            return False
    if m == 1:
        return True
    if m % 4 == 3:
        # some prime 3 mod 4 divides m to an odd power
        return False
    if is_probable_prime(m):
        return True
    r = math.isqrt(m)
    if r * r == m:
        return True
    return all(e % 2 == 0 for p, e in factorize(m).factors if p % 4 == 3)
