"""Command line entry point: ``brauer-zk {decide,table,witness,invariants,check}``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .arith import largest_power_divisor
from .decide import SCHEMA_VERSION, UNCONDITIONAL, ispossible, table_generate
from .invariants import (
    check_abthm,
    check_jagy_obstruction,
    check_strong_approx_failure,
    invariant_sets,
)
from .oracle import witness_search

EXIT_YES, EXIT_NO, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _odd_k(k: int, minimum: int = 1) -> None:
    if k % 2 == 0:
        raise UsageError(f"k={k} is even; only odd k is supported by this method")
    if k < minimum:
        raise UsageError(f"k must be at least {minimum}")


def _witness_line(w: tuple[int, int, int] | None, k: int, bound: int) -> str:
    if w is None:
        return f"witness: none with |z| <= {bound}"
    x, y, z = w
    return f"witness: {x}^2 + {y}^2 + ({z})^{k}"


def cmd_decide(args: argparse.Namespace) -> int:
    k, m = args.k, args.m
    _odd_k(k)
    witness = witness_search(k, m, args.witness_bound) if args.witness else None
    if m == 0:
        if args.json:
            payload = {"schema_version": SCHEMA_VERSION, "k": k, "m": 0, "verdict": True,
                       "hypothesis": UNCONDITIONAL, "shortcut": "zero"}
            _emit(json.dumps(payload, indent=2), args.out)
        else:
            _emit(f"representable: 0 = 0^2 + 0^2 + 0^{k}", args.out)
        return EXIT_YES

    report = ispossible(k, m)
    if args.json:
        payload = report.to_dict()
        if args.witness:
            payload["witness"] = list(witness) if witness else None
        _emit(json.dumps(payload, indent=2), args.out)
        return EXIT_YES if report.verdict else EXIT_NO

    lines = []
    if report.shortcut:
        lines.append(f"representable: {m} = {report.n}^{k}")
    elif report.verdict:
        lines.append(f"representable (conditional on {report.hypothesis})")
    else:
        lines.append("not representable (unconditional)")
    if args.trace and not report.shortcut:
        lines.append(f"a={report.a} b={report.b} n={report.n}")
        for p, r in report.per_prime.items():
            lines.append(
                f"  p={p}: W={r.sorted_subsets()} nodes={r.nodes_visited} depth={r.max_depth}"
            )
        lines.append(f"  T={report.aggregate_subsets()}")
    if args.witness:
        lines.append(_witness_line(witness, k, args.witness_bound))
    _emit("\n".join(lines), args.out)
    return EXIT_YES if report.verdict else EXIT_NO


def _power_repr(m: int, k: int) -> tuple[int, int]:
    a, n = largest_power_divisor(m, k)
    return n, a


def cmd_table(args: argparse.Namespace) -> int:
    _odd_k(args.k, minimum=3)
    if args.max < 1:
        raise UsageError("--max must be positive")
    values = table_generate(args.k, args.max, mode=args.mode)
    if args.json:
        entries = []
        for m in values:
            n, a = _power_repr(m, args.k)
            entries.append({"m": m, "n": n, "a": a})
        payload = {"schema_version": SCHEMA_VERSION, "k": args.k, "max": args.max,
                   "entries": entries}
        _emit(json.dumps(payload, indent=2), args.out)
    elif args.raw:
        _emit(" ".join(str(m) for m in values), args.out)
    else:
        _emit(", ".join("{}^{}".format(*_power_repr(m, args.k)) for m in values), args.out)
    return EXIT_YES


def cmd_witness(args: argparse.Namespace) -> int:
    _odd_k(args.k)
    w = witness_search(args.k, args.m, args.bound)
    if args.json:
        _emit(json.dumps({"k": args.k, "m": args.m, "bound": args.bound,
                          "witness": list(w) if w else None}), args.out)
    else:
        _emit(_witness_line(w, args.k, args.bound), args.out)
    return EXIT_YES if w else EXIT_NO


def cmd_invariants(args: argparse.Namespace) -> int:
    sets = invariant_sets(args.a, args.b, args.n)
    if args.json:
        payload = [
            {"place": str(s.place), "values": [str(v) for v in sorted(s.values)],
             "status": s.status, "reason": s.reason}
            for s in sets
        ]
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        _emit("\n".join(f"{s}  ({s.reason})" for s in sets), args.out)
    return EXIT_YES


def cmd_check(args: argparse.Namespace) -> int:
    if args.kind == "jagy":
        hit = check_jagy_obstruction(args.a, args.b, args.n)
        text = "obstructed" if hit else "not covered by the criterion"
    elif args.kind == "strong-approx":
        hit = check_strong_approx_failure(args.a, args.b, args.n)
        text = "fails" if hit else "not covered by the criterion"
    else:
        if args.m is None:
            raise UsageError("check abthm needs -m")
        ok = check_abthm(args.a, args.b, args.m)
        text = "solvable (conditional on Schinzel (H))" if ok else "obstructed"
    _emit(text, args.out)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brauer-zk",
        description="Integral solvability of x^2 + y^2 + z^k = m for odd k.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("decide", help="decide whether m is representable")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="show per-prime W sets and T")
    p.add_argument("--witness", action="store_true", help="also search for (x, y, z)")
    p.add_argument("--witness-bound", type=int, default=1000)
    common(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("table", help="list obstructed m in [1, max]")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--max", type=int, default=10**9)
    p.add_argument("--raw", action="store_true", help="plain integers instead of n^a")
    p.add_argument("--mode", choices=("fast", "full-scan"), default="fast")
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("witness", help="brute-force search for an integral solution")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--bound", type=int, default=1000)
    common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("invariants", help="local invariant sets I_v(a, b, n)")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("check", help="closed-form obstruction criteria")
    p.add_argument("kind", choices=("jagy", "strong-approx", "abthm"))
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("-n", type=int)
    p.add_argument("-m", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_YES
    if args.command == "check" and args.kind != "abthm" and args.n is None:
        print(f"error: check {args.kind} needs -n", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
