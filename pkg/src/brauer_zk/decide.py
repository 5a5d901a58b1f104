"""Deciding whether m = x**2 + y**2 + z**k has an integral solution (k odd)."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .arith import divisors, factorize, integer_nth_root, largest_power_divisor
from .combi import DEFAULT_MAX_DEPTH, CombiResult, DivisorBasis, combi

__all__ = [
    "SCHEMA_VERSION",
    "UNCONDITIONAL",
    "BUNYAKOVSKY",
    "SCHINZEL",
    "DecisionReport",
    "ispossible",
    "fold_symmetric_difference",
    "table_generate",
    "worker_count",
]

SCHEMA_VERSION = 1

UNCONDITIONAL = "unconditional"
BUNYAKOVSKY = "Bunyakovsky"
SCHINZEL = "Schinzel (H)"


@dataclass
class DecisionReport:
    k: int
    m: int
    verdict: bool
    a: int
    b: int
    n: int
    shortcut: str | None = None
    per_prime: dict[int, CombiResult] = field(default_factory=dict)
    aggregate_T: set[int] = field(default_factory=set)

    @property
    def hypothesis(self) -> str:
        """What a ``True`` verdict rests on; ``False`` is always unconditional."""
        if not self.verdict or self.shortcut is not None:
            return UNCONDITIONAL
        if self.a == 1:
            return BUNYAKOVSKY
        return SCHINZEL

    def aggregate_subsets(self) -> list[list[int]]:
        basis = DivisorBasis(tuple(divisors(self.a)))
        return sorted(sorted(basis.to_set(mask)) for mask in self.aggregate_T)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "k": self.k,
            "m": self.m,
            "verdict": self.verdict,
            "hypothesis": self.hypothesis,
            "shortcut": self.shortcut,
            "a": self.a,
            "b": self.b,
            "n": self.n,
            "per_prime": {
                str(p): {
                    "subsets": r.sorted_subsets(),
                    "nodes_visited": r.nodes_visited,
                    "max_depth": r.max_depth,
                }
                for p, r in self.per_prime.items()
            },
            "aggregate_T": self.aggregate_subsets(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> DecisionReport:
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {data.get('schema_version')!r}")
        a, b, n = data["a"], data["b"], data["n"]
        basis = DivisorBasis(tuple(divisors(a)))
        per_prime = {}
        for key, entry in data["per_prime"].items():
            p = int(key)
            per_prime[p] = CombiResult(
                a,
                b,
                n,
                p,
                basis,
                {basis.to_mask(s) for s in entry["subsets"]},
                entry["nodes_visited"],
                entry["max_depth"],
            )
        return cls(
            data["k"],
            data["m"],
            data["verdict"],
            a,
            b,
            n,
            data["shortcut"],
            per_prime,
            {basis.to_mask(s) for s in data["aggregate_T"]},
        )


def fold_symmetric_difference(sets: Iterable[set[int]]) -> set[int]:
    """``{t ^ w}`` folded over a sequence of mask sets, starting from ``{0}``."""
    T = {0}
    for W in sets:
        T = {t ^ w for t in T for w in W}
    return T


def ispossible(
    k: int, m: int, *, max_depth: int = DEFAULT_MAX_DEPTH
) -> DecisionReport:
    """Run the local-symbol decision procedure for ``x**2 + y**2 + z**k = m``.

    A ``False`` verdict proves there is no integral solution.  A ``True``
    verdict means no obstruction from these algebras exists, which implies a
    solution under Schinzel's hypothesis (H) (see ``DecisionReport.hypothesis``).
    """
    if k < 1 or k % 2 == 0:
        raise ValueError(f"k must be odd and positive, got {k}")
    if m == 0:
        raise ValueError("m must be nonzero")
    root = integer_nth_root(m, k)
    if root is not None:
        return DecisionReport(k, m, True, k, 1, root, shortcut="perfect k-th power")

    a, n = largest_power_divisor(m, k)
    b = k // a
    report = DecisionReport(k, m, False, a, b, n)
    for p in factorize(2 * a * n).primes():
        report.per_prime[p] = combi(a, b, n, p, max_depth=max_depth)
    report.aggregate_T = fold_symmetric_difference(
        r.masks for r in report.per_prime.values()
    )
    report.verdict = 0 in report.aggregate_T
    return report


def worker_count() -> int:
    raw = os.environ.get("OBSTRUCTION_THREADS", "").strip()
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return 1


def _verdict(args: tuple[int, int]) -> tuple[int, bool]:
    k, m = args
    return m, ispossible(k, m).verdict


def _power_candidates(k: int, max_m: int) -> list[int]:
    found = set()
    for a in divisors(k)[1:]:
        n = 2
        while n**a <= max_m:
            found.add(n**a)
            n += 1
    return sorted(found)


def table_generate(
    k: int, max_m: int, mode: str = "fast", workers: int | None = None
) -> list[int]:
    """All ``1 <= m <= max_m`` for which ``ispossible(k, m)`` is False.

    ``fast`` only tries m = n**a for divisors a > 1 of k; any other m is not
    a q-th power for a prime q | k and always has a solution under
    Bunyakovsky's conjecture.  ``full-scan`` checks every m and is meant for
    validating that shortcut on small ranges.
    """
    if k < 3 or k % 2 == 0:
        raise ValueError(f"k must be odd and at least 3, got {k}")
    if mode == "fast":
        candidates = _power_candidates(k, max_m)
    elif mode == "full-scan":
        candidates = list(range(1, max_m + 1))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    workers = worker_count() if workers is None else workers
    jobs = [(k, m) for m in candidates]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verdict, jobs, chunksize=64))
    else:
        results = [_verdict(j) for j in jobs]
    return sorted(m for m, ok in results if not ok)
