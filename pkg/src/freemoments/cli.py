"""Command-line interface.

Three subcommands:

* ``moments`` - run the engine and print tau(p(s)^m) for m = 1..M;
* ``verify``  - compute the same moments with the exponential expansion
  oracle and diff the two, exiting nonzero on any mismatch;
* ``bench``   - time the engine against the naive expansion over a sweep of
  orders and report the fitted log-log slope (informational only).

Values are always printed as exact fractions; ``--decimal`` adds a floating
approximation alongside (never instead).  Exit codes: 0 success, 1 verify
mismatch, 2 parse error, 3 internal error, 4 oracle cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .engine import complexity_probe, moments
from .errors import CapExceededError, PolyParseError
from .ncpoly import NCPolynomial, infer_variable_count, parse_polynomial
from .oracle import CUMULANT_CAP, DEFAULT_EXPANSION_CAP, brute_moment, free_cumulants
from .scalar import Scalar

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_INTERNAL = 3
EXIT_CAP = 4

ENV_EXPANSION_CAP = "FREEMOMENTS_EXPANSION_CAP"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freemoments",
        description=(
            "Exact moments of noncommutative polynomials evaluated at free "
            "independent standard semicircular elements."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--poly",
        required=True,
        help="polynomial in variables x1..xn, e.g. 'x1^3 - 3*x1'",
    )
    common.add_argument(
        "--n-vars",
        type=int,
        default=None,
        help="ambient variable count (default: highest index appearing)",
    )
    common.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--decimal",
        action="store_true",
        help="also print decimal approximations next to exact values",
    )
    common.add_argument(
        "--expansion-cap",
        type=int,
        default=None,
        help=(
            "max term count for the naive oracle expansion "
            f"(default {DEFAULT_EXPANSION_CAP}; env {ENV_EXPANSION_CAP})"
        ),
    )

    p_moments = sub.add_parser(
        "moments", parents=[common], help="compute moments with the engine"
    )
    p_moments.add_argument(
        "--max-order", type=int, required=True, help="highest moment order M"
    )

    p_verify = sub.add_parser(
        "verify",
        parents=[common],
        help="check the engine against the brute-force oracle",
    )
    p_verify.add_argument(
        "--max-order", type=int, required=True, help="highest moment order M"
    )

    p_bench = sub.add_parser(
        "bench",
        parents=[common],
        help="time the engine vs the naive expansion over a sweep of orders",
    )
    p_bench.add_argument(
        "--sweep",
        default="8,16,32",
        help="comma-separated list of orders (default: 8,16,32)",
    )
    return parser


def _expansion_cap(args) -> int:
    if args.expansion_cap is not None:
        return args.expansion_cap
    env = os.environ.get(ENV_EXPANSION_CAP)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise PolyParseError(
                f"{ENV_EXPANSION_CAP} must be an integer", env, 0
            )
    return DEFAULT_EXPANSION_CAP


def _load_polynomial(args) -> tuple[NCPolynomial, List[str]]:
    n_vars = args.n_vars if args.n_vars is not None else infer_variable_count(args.poly)
    if n_vars < 1:
        raise PolyParseError("--n-vars must be positive", args.poly, 0)
    poly = parse_polynomial(args.poly, n_vars)
    warnings = []
    if not poly.is_self_adjoint():
        warnings.append(
            "polynomial is not self-adjoint; moments may have nonzero "
            "imaginary part"
        )
    return poly, warnings


def _approx(value: Scalar) -> dict:
    return {"re_approx": float(value.re), "im_approx": float(value.im)}


def _cmd_moments(args, out) -> int:
    poly, warnings = _load_polynomial(args)
    if args.max_order < 1:
        raise PolyParseError("--max-order must be at least 1", args.poly, 0)
    mv = moments(poly, args.max_order)

    if args.format == "json":
        rows = []
        for m, value in enumerate(mv.values, start=1):
            row = {"m": m, "re": str(value.re), "im": str(value.im)}
            if args.decimal:
                row.update(_approx(value))
            rows.append(row)
        doc = {
            "poly": str(poly),
            "n_vars": poly.n_vars,
            "M": mv.max_order,
            "N": mv.rep_dim,
            "iterations": mv.iterations,
            "moments": rows,
            "warnings": warnings,
        }
        print(json.dumps(doc), file=out)
        return EXIT_OK

    if args.format == "csv":
        header = "m,re,im"
        if args.decimal:
            header += ",re_approx,im_approx"
        print(header, file=out)
        for m, value in enumerate(mv.values, start=1):
            line = f"{m},{value.re},{value.im}"
            if args.decimal:
                line += f",{float(value.re)!r},{float(value.im)!r}"
            print(line, file=out)
        return EXIT_OK

    print(f"poly: {poly}", file=out)
    print(
        f"n_vars: {poly.n_vars}  M: {mv.max_order}  N: {mv.rep_dim}  "
        f"iterations: {mv.iterations}  deg: {mv.degree}  terms: {mv.n_terms}",
        file=out,
    )
    for warning in warnings:
        print(f"warning: {warning}", file=out)
    print("moments:", file=out)
    for m, value in enumerate(mv.values, start=1):
        line = f"  m={m}  {value}"
        if args.decimal:
            line += f"  ~ {value.to_float()}"
        print(line, file=out)
    k_max = min(mv.max_order, CUMULANT_CAP)
    kappas = free_cumulants(mv.values[:k_max])
    print(f"free cumulants (orders 1..{k_max}):", file=out)
    for k, value in enumerate(kappas, start=1):
        line = f"  k={k}  {value}"
        if args.decimal:
            line += f"  ~ {value.to_float()}"
        print(line, file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    poly, warnings = _load_polynomial(args)
    if args.max_order < 1:
        raise PolyParseError("--max-order must be at least 1", args.poly, 0)
    cap = _expansion_cap(args)
    mv = moments(poly, args.max_order)
    mismatches = []
    for m in range(1, args.max_order + 1):
        oracle_value = brute_moment(poly, m, cap)
        if mv.value(m) != oracle_value:
            mismatches.append((m, mv.value(m), oracle_value))

    if args.format == "json":
        doc = {
            "poly": str(poly),
            "n_vars": poly.n_vars,
            "M": args.max_order,
            "ok": not mismatches,
            "mismatches": [
                {"m": m, "engine": str(e), "oracle": str(o)}
                for m, e, o in mismatches
            ],
            "warnings": warnings,
        }
        print(json.dumps(doc), file=out)
    elif args.format == "csv":
        print("m,engine,oracle,match", file=out)
        oracle_values = {m: o for m, _, o in mismatches}
        for m in range(1, args.max_order + 1):
            engine_value = mv.value(m)
            if m in oracle_values:
                print(f"{m},{engine_value},{oracle_values[m]},0", file=out)
            else:
                print(f"{m},{engine_value},{engine_value},1", file=out)
    else:
        print(f"poly: {poly}", file=out)
        for warning in warnings:
            print(f"warning: {warning}", file=out)
        if mismatches:
            for m, engine_value, oracle_value in mismatches:
                print(
                    f"MISMATCH at m={m}: engine={engine_value} "
                    f"oracle={oracle_value}",
                    file=out,
                )
            print(f"FAIL ({len(mismatches)} of {args.max_order} orders differ)", file=out)
        else:
            print(f"PASS (orders 1..{args.max_order} agree exactly)", file=out)
    return EXIT_OK if not mismatches else EXIT_MISMATCH


def _cmd_bench(args, out) -> int:
    poly, warnings = _load_polynomial(args)
    try:
        orders = [int(s) for s in args.sweep.split(",") if s.strip()]
    except ValueError:
        raise PolyParseError("--sweep must be comma-separated integers", args.sweep, 0)
    if not orders or any(m < 1 for m in orders):
        raise PolyParseError("--sweep orders must be positive", args.sweep, 0)
    cap = _expansion_cap(args)
    report = complexity_probe(poly, orders, cap)

    if args.format == "json":
        doc = {
            "poly": str(poly),
            "n_vars": poly.n_vars,
            "sweep": [
                {
                    "M": row.max_order,
                    "engine_seconds": row.engine_seconds,
                    "naive_seconds": row.naive_seconds,
                    "naive_capped": row.naive_capped,
                }
                for row in report.rows
            ],
            "engine_slope": report.engine_slope,
            "warnings": warnings,
        }
        print(json.dumps(doc), file=out)
    elif args.format == "csv":
        print("M,engine_seconds,naive_seconds,naive_capped", file=out)
        for row in report.rows:
            naive = "" if row.naive_seconds is None else f"{row.naive_seconds:.6f}"
            print(
                f"{row.max_order},{row.engine_seconds:.6f},{naive},"
                f"{int(row.naive_capped)}",
                file=out,
            )
    else:
        print(f"poly: {poly}", file=out)
        print(f"{'M':>6}  {'engine (s)':>12}  {'naive (s)':>12}", file=out)
        for row in report.rows:
            if row.naive_capped:
                naive = "capped"
            elif row.naive_seconds is None:
                naive = "-"
            else:
                naive = f"{row.naive_seconds:.4f}"
            print(f"{row.max_order:>6}  {row.engine_seconds:>12.4f}  {naive:>12}", file=out)
        if report.engine_slope is not None:
            print(f"engine log-log slope: {report.engine_slope:.2f}", file=out)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "moments":
            return _cmd_moments(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        return _cmd_bench(args, out)
    except PolyParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceededError as exc:
        print(
            f"error: {exc}\nhint: lower --max-order or raise --expansion-cap "
            f"(or {ENV_EXPANSION_CAP})",
            file=sys.stderr,
        )
        return EXIT_CAP
    except Exception as exc:  # invariant violations and everything unexpected
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
