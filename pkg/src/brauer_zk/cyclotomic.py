"""Cyclotomic polynomials and the factors f_d of X**(a*b) + n**a."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .arith import divisors

__all__ = [
    "IntPolynomial",
    "FdFamily",
    "cyclotomic_poly",
    "euler_phi",
    "build_fd",
    "eval_fd_at_neg_z",
    "fd_family",
]


class IntPolynomial:
    """Dense integer polynomial, ``coeffs[i]`` is the coefficient of X**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        # the zero polynomial gets degree -1
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-x for x in self.coeffs)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def divmod_monic(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division by a monic polynomial, exact over the integers."""
        if divisor.leading != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPolynomial(()), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                quot[i - dd] = c
                for j, y in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * y
        return IntPolynomial(quot), IntPolynomial(rem[:dd])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and i > 0) else str(mag)
            if i >= 1:
                body += "X" if i == 1 else f"X^{i}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def euler_phi(d: int) -> int:
    return cyclotomic_poly(d).degree


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> IntPolynomial:
    """The d-th cyclotomic polynomial, by dividing Y**d - 1 by the smaller ones."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = IntPolynomial.monomial(d) - IntPolynomial([1])
    for e in divisors(d)[:-1]:
        poly, rem = poly.divmod_monic(cyclotomic_poly(e))
        assert rem.is_zero()
    return poly


def build_fd(a: int, b: int, n: int, d: int) -> IntPolynomial:
    """Expanded ``(-n)**phi(d) * phi_d(-Z**b / n)``, a monic integer polynomial."""
    if a < 1 or a % d:
        raise ValueError(f"{d} is not a divisor of {a}")
    if n == 0:
        raise ValueError("n must be nonzero")
    c = cyclotomic_poly(d).coeffs
    phi = len(c) - 1
    out = [0] * (b * phi + 1)
    for i, ci in enumerate(c):
        out[b * i] = ci * (-n) ** (phi - i)
    return IntPolynomial(out)


def eval_fd_at_neg_z(f: IntPolynomial, z: int) -> int:
    return f(-z)


@dataclass(frozen=True)
class FdFamily:
    """All f_d for the divisors d of a; their product is X**(a*b) + n**a."""

    a: int
    b: int
    n: int
    divisors: tuple[int, ...]
    members: dict[int, IntPolynomial] = field(compare=False)

    def product(self) -> IntPolynomial:
        out = IntPolynomial([1])
        for d in self.divisors:
            out = out * self.members[d]
        return out

    def values_at_neg_z(self, z: int) -> list[int]:
        """``f_d(-z)`` for every divisor, in divisor order."""
        return [self.members[d](-z) for d in self.divisors]


def fd_family(a: int, b: int, n: int) -> FdFamily:
    divs = tuple(divisors(a))
    return FdFamily(a, b, n, divs, {d: build_fd(a, b, n, d) for d in divs})
