"""The Hilbert symbol (a, -1) at every place of Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .arith import factorize, is_probable_prime, vp_rp

__all__ = [
    "Place",
    "REAL",
    "HALF",
    "ZERO",
    "hilbert_neg_one",
    "symbol_at_prime",
    "invariant_of_symbol",
    "bad_places",
]

ZERO = Fraction(0)
HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class Place:
    """A place of Q: ``prime=None`` is the real place, otherwise a prime p."""

    prime: int | None = None

    def __post_init__(self) -> None:
        if self.prime is not None and not is_probable_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @property
    def is_real(self) -> bool:
        return self.prime is None

    def __str__(self) -> str:
        return "inf" if self.prime is None else str(self.prime)

    @classmethod
    def parse(cls, text: str) -> Place:
        if text.strip().lower() in ("inf", "oo", "infinity", "real"):
            return REAL
        return cls(int(text))


REAL = Place()

PlaceLike = Union[Place, int]
RationalLike = Union[int, Fraction, tuple]


def _as_place(v: PlaceLike) -> Place:
    return v if isinstance(v, Place) else Place(v)


def _as_integer_class(a: RationalLike) -> int:
    # num/den and num*den differ by the square den**2
    if isinstance(a, tuple):
        num, den = a
    elif isinstance(a, Fraction):
        num, den = a.numerator, a.denominator
    else:
        num, den = a, 1
    if num == 0 or den == 0:
        raise ValueError("Hilbert symbol needs a nonzero rational")
    return num * den


def hilbert_neg_one(a: RationalLike, v: PlaceLike) -> int:
    """Return ``(a, -1)_v`` as +1 or -1.

    ``a`` may be an int, a Fraction or a ``(numerator, denominator)`` pair.
    """
    x = _as_integer_class(a)
    v = _as_place(v)
    if v.is_real:
        return 1 if x > 0 else -1
    return symbol_at_prime(x, v.prime)


def symbol_at_prime(x: int, p: int) -> int:
    """``(x, -1)_p`` for a nonzero integer ``x``; ``p`` is trusted to be prime."""
    if p == 2:
        return 1 if vp_rp(x, 2).unit % 4 == 1 else -1
    if p % 4 == 1:
        return 1
    return 1 if vp_rp(x, p).valuation % 2 == 0 else -1


def invariant_of_symbol(s: int) -> Fraction:
    """Local invariant of the quaternion algebra with Hilbert symbol ``s``."""
    if s == 1:
        return ZERO
    if s == -1:
        return HALF
    raise ValueError(f"a Hilbert symbol is +1 or -1, got {s}")


def bad_places(a: RationalLike) -> list[Place]:
    """All places where ``(a, -1)_v`` is -1; finite, and of even size."""
    x = _as_integer_class(a)
    candidates = [REAL, Place(2)] + [Place(p) for p in factorize(x).primes() if p != 2]
    return [v for v in candidates if hilbert_neg_one(x, v) == -1]
