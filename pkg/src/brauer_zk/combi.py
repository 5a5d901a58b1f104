"""Pruned breadth-first search over residues z mod p**t.

For fixed (a, b, n) and a prime p the search returns every divisor subset
``w_z = {d | a : (f_d(-z), -1)_p = -1}`` attained by some nonnegative
integer z with ``(n**a - z**(a*b), -1)_p = +1``.  Subsets are stored as
bitmasks over the ascending divisor list of a.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .arith import factorize, integer_nth_root, valuation, vp_rp
from .cyclotomic import FdFamily, IntPolynomial, fd_family
from .hilbert import symbol_at_prime

__all__ = [
    "DEFAULT_MAX_DEPTH",
    "SearchDepthExceeded",
    "DivisorBasis",
    "CombiResult",
    "w_of_z",
    "g_of_tz",
    "combi",
    "check_combi_inputs",
]

DEFAULT_MAX_DEPTH = 64


class SearchDepthExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DivisorBasis:
    """Bit i of a mask stands for the i-th smallest divisor of a."""

    divisors: tuple[int, ...]

    def to_mask(self, subset: Iterable[int]) -> int:
        mask = 0
        for d in subset:
            mask |= 1 << self.divisors.index(d)
        return mask

    def to_set(self, mask: int) -> frozenset[int]:
        return frozenset(d for i, d in enumerate(self.divisors) if mask >> i & 1)

    @property
    def full(self) -> int:
        return (1 << len(self.divisors)) - 1


@dataclass
class CombiResult:
    a: int
    b: int
    n: int
    p: int
    basis: DivisorBasis
    masks: set[int] = field(default_factory=set)
    nodes_visited: int = 0
    max_depth: int = 0

    @property
    def subsets(self) -> set[frozenset[int]]:
        return {self.basis.to_set(m) for m in self.masks}

    def sorted_subsets(self) -> list[list[int]]:
        return sorted(sorted(s) for s in self.subsets)


def check_combi_inputs(a: int, b: int, n: int) -> None:
    if a < 1 or a % 2 == 0:
        raise ValueError(f"a must be odd and positive, got {a}")
    if b < 3 or b % 2 == 0:
        raise ValueError(f"b must be odd and at least 3, got {b}")
    if n == 0:
        raise ValueError("n must be nonzero")
    for q in factorize(b).primes():
        if integer_nth_root(n, q) is not None:
            raise ValueError(f"n={n} is a {q}-th power and {q} divides b={b}")


def _w_and_g(values: list[int], p: int, t: int) -> tuple[int, int]:
    w = g = 0
    for i, f in enumerate(values):
        if f == 0:
            raise ValueError("f_d(-z) vanished; n must not be a q-th power for q | b")
        dec = vp_rp(f, p)
        if p == 2:
            bad = dec.unit % 4 != 1
        elif p % 4 == 1:
            bad = False
        else:
            bad = dec.valuation % 2 == 1
        if bad:
            w |= 1 << i
        if dec.valuation + 1 >= t:
            g |= 1 << i
    return w, g


def w_of_z(family: FdFamily, p: int, z: int) -> int:
    """Mask of divisors d with ``(f_d(-z), -1)_p = -1``."""
    return _w_and_g(family.values_at_neg_z(z), p, 0)[0]


def g_of_tz(family: FdFamily, p: int, t: int, z: int) -> int:
    """Mask of divisors d with ``v_p(f_d(-z)) + 1 >= t``."""
    return _w_and_g(family.values_at_neg_z(z), p, t)[1]


def _taylor_rows(poly: IntPolynomial) -> list[tuple[int, ...]]:
    """Coefficients of the i-th Taylor coefficient of ``Y -> poly(-Y)``."""
    coeffs = [c if j % 2 == 0 else -c for j, c in enumerate(poly.coeffs)]
    rows = []
    for i in range(1, len(coeffs)):
        rows.append(tuple(comb(j, i) * coeffs[j] for j in range(i, len(coeffs))))
    return rows


def _settled(rows: list[tuple[int, ...]], z: int, t: int, v: int, p: int) -> bool:
    # every lift z + h*p**t keeps v_p, and for p = 2 also the unit mod 4
    need = v + 2 if p == 2 else v + 1
    for i, row in enumerate(rows, start=1):
        if t * i >= need:
            return True
        c = 0
        for coeff in reversed(row):
            c = c * z + coeff
        if c and valuation(c, p) + t * i < need:
            return False
    return True


def combi(
    a: int,
    b: int,
    n: int,
    p: int,
    *,
    pruning: str = "taylor",
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> CombiResult:
    """Every ``w_z`` over z >= 0 with ``(n**a - z**(a*b), -1)_p = +1``.

    Nodes are pairs (t, z) with 0 <= z < p**t.  A node is expanded into its
    p children unless the set of divisors whose symbol may still change
    below it is empty, or is a single divisor g for which one of ``w - {g}``
    and ``w + {g}`` has already been collected; the other cannot occur since
    every collected subset has even size.  ``W`` is read as it grows within a
    sweep, which only affects how much is pruned, not the returned set.

    ``pruning="literal"`` treats d as unsettled while
    ``v_p(f_d(-z)) + 1 >= t``.  The default ``"taylor"`` also settles d once
    every higher Taylor term of ``f_d`` around -z has larger valuation than
    the value itself, which is what keeps primes p | n of size ~10**3
    tractable; the returned set is the same.  ``pruning="none"`` expands
    everything down to ``max_depth`` and is only useful for testing.
    """
    if pruning not in ("taylor", "literal", "none"):
        raise ValueError(f"unknown pruning mode {pruning!r}")
    check_combi_inputs(a, b, n)
    family = fd_family(a, b, n)
    basis = DivisorBasis(family.divisors)
    result = CombiResult(a, b, n, p, basis)
    if p % 4 == 1:
        result.masks.add(0)
        return result

    W = result.masks
    ab = a * b
    na = n**a
    polys = [family.members[d] for d in family.divisors]
    # Taylor rows are built on first use; most searches stop at depth 0
    taylor: list | None = [None] * len(polys) if pruning == "taylor" else None
    # there are 2**(r-1) even-size subsets of r divisors; once all are in W
    # the search cannot add anything
    saturated = 1 << (len(family.divisors) - 1)
    # expanded nodes of the previous depth; children are generated lazily
    # so that a saturated W stops the sweep before p**t tuples are built
    expanded: list[tuple[int, int]] = [(0, basis.full)]
    t = 0
    while expanded and len(W) < saturated:
        if t > max_depth:
            if pruning == "none":
                break
            raise SearchDepthExceeded(
                f"combi({a}, {b}, {n}, {p}) passed depth {max_depth}"
            )
        result.max_depth = t
        if t == 0:
            level = iter(expanded)
        else:
            step = p ** (t - 1)
            level = ((z + j * step, g) for z, g in expanded for j in range(p))
        nxt: list[tuple[int, int]] = []
        for z, parent in level:
            result.nodes_visited += 1
            values = [f(-z) for f in polys]
            w, g = _w_and_g(values, p, t)
            if taylor is not None and t > 0:
                g &= parent
                for i in range(len(polys)):
                    if g >> i & 1:
                        if taylor[i] is None:
                            taylor[i] = _taylor_rows(polys[i])
                        v = valuation(values[i], p)
                        if _settled(taylor[i], z, t, v, p):
                            g &= ~(1 << i)
            if symbol_at_prime(na - z**ab, p) == 1:
                W.add(w)
                if len(W) == saturated and pruning != "none":
                    break
            size = g.bit_count()
            if pruning == "none":
                expand = True
            else:
                expand = size > 1 or (
                    size == 1 and (w & ~g) not in W and (w | g) not in W
                )
            if expand:
                nxt.append((z, g))
        expanded = nxt
        t += 1
    return result
