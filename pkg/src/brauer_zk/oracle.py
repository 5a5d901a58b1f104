"""Brute-force checks that do not go through the local-symbol machinery."""

from __future__ import annotations

from math import isqrt

from .arith import factorize, integer_nth_root, is_sum_of_two_squares
from .combi import check_combi_inputs
from .cyclotomic import fd_family
from .hilbert import symbol_at_prime

__all__ = [
    "witness_search",
    "two_square_decomposition",
    "z_scan_order",
    "residue_scan_C",
    "half_invariant_scan",
    "scan_depth",
]

SCAN_LIMIT = 10**12


def z_scan_order(bound: int):
    """0, -1, 1, -2, 2, ... up to ``|z| <= bound``."""
    yield 0
    for r in range(1, bound + 1):
        yield -r
        yield r


def _sqrt_minus_one(p: int) -> int:
    for c in range(2, p):
        if pow(c, (p - 1) // 2, p) == p - 1:
            return pow(c, (p - 1) // 4, p)
    raise ValueError(f"no square root of -1 modulo {p}")


def _prime_two_squares(p: int) -> tuple[int, int]:
    if p == 2:
        return 1, 1
    # Euclid on (p, sqrt(-1)) stops at the first remainder below sqrt(p)
    a, b = p, _sqrt_minus_one(p)
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    return b, isqrt(p - b * b)


def two_square_decomposition(c: int) -> tuple[int, int] | None:
    """Some ``(x, y)`` with ``x**2 + y**2 == c`` and ``0 <= x <= y``, or None.

    Small ``c`` are scanned by ascending x so the smallest x is returned.
    """
    if c < 0:
        return None
    if c <= SCAN_LIMIT:
        for x in range(isqrt(c // 2) + 1):
            y = isqrt(c - x * x)
            if y * y == c - x * x:
                return x, y
        return None
    if not is_sum_of_two_squares(c):
        return None
    re, im, scale = 1, 0, 1
    for p, e in factorize(c).factors:
        if p % 4 == 3:
            scale *= p ** (e // 2)
            continue
        u, v = _prime_two_squares(p)
        for _ in range(e):
            re, im = re * u - im * v, re * v + im * u
    x, y = sorted((abs(re) * scale, abs(im) * scale))
    assert x * x + y * y == c
    return x, y


def witness_search(k: int, m: int, z_bound: int) -> tuple[int, int, int] | None:
    """First ``(x, y, z)`` with ``x**2 + y**2 + z**k == m`` and ``|z| <= z_bound``.

    A perfect k-th power returns ``(0, 0, root)`` straight away.  Otherwise z
    runs through 0, -1, 1, -2, 2, ...
    """
    if k % 2 == 1:
        root = integer_nth_root(m, k)
        if root is not None and abs(root) <= z_bound:
            return 0, 0, root
    for z in z_scan_order(z_bound):
        c = m - z**k
        if c < 0 or not is_sum_of_two_squares(c):
            continue
        xy = two_square_decomposition(c)
        if xy is not None:
            return xy[0], xy[1], z
    return None


def residue_scan_C(a: int, b: int, n: int, p: int, depth: int) -> set[frozenset[int]]:
    """``{w_z : 0 <= z < p**depth, (n**a - z**(a*b), -1)_p = +1}`` by direct scan."""
    check_combi_inputs(a, b, n)
    family = fd_family(a, b, n)
    na, ab = n**a, a * b
    found = set()
    for z in range(p**depth):
        if symbol_at_prime(na - z**ab, p) != 1:
            continue
        w = frozenset(
            d for d, f in family.members.items() if symbol_at_prime(f(-z), p) == -1
        )
        found.add(w)
    return found


def scan_depth(p: int, budget: int = 20_000, cap: int = 6) -> int:
    """Largest depth ``<= cap`` with ``p**depth <= budget`` (at least 1)."""
    depth = 1
    while depth < cap and p ** (depth + 1) <= budget:
        depth += 1
    return depth


def half_invariant_scan(a: int, b: int, n: int, p: int, depth: int) -> bool:
    """Is there ``0 <= z < p**depth`` where the invariant at p is 1/2?

    That means ``n**a - z**(a*b)`` is a local sum of two squares (so the
    fibre over z has p-adic integral points) while ``n - z**b`` is not.
    """
    na, ab = n**a, a * b
    for z in range(p**depth):
        c = na - z**ab
        if c == 0 or symbol_at_prime(c, p) != 1:
            continue
        e = n - z**b
        if e != 0 and symbol_at_prime(e, p) == -1:
            return True
    return False
