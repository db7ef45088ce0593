"""Command-line interface.

Exit codes: 0 success, 1 internal error, 2 usage/parse error, 3 finding (a spin
Kerov coefficient beyond the published range that is negative or non-integral).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .exact import fmt_rational
from .kerov import (
    KerovPolynomial,
    coincidence_report,
    ordinary_character_eval,
    ordinary_kerov,
    positivity_record,
    spin_kerov,
    symmetrized_spin_kerov,
)
from .known import SPIN_KEROV, SYMMETRIZED_KEROV
from .measures import biane_cumulant, transition_moments
from .oracle import character_table
from .partitions import is_strict, parse_partition
from .spin import spin_character_eval, spin_free_cumulant_eval, symmetrized_cumulant_eval

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_FINDING = 0, 1, 2, 3
DEFAULT_CAP = 21
CAP_ENV = "SPINKEROV_MAX_K"
LARGE_K_WARNING = 15


class UsageError(Exception):
    pass


def _cap(args) -> int:
    if args.max_k_cap is not None:
        return args.max_k_cap
    raw = os.environ.get(CAP_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"{CAP_ENV}={raw!r} is not an integer")
    return DEFAULT_CAP


def _check_k(args, k: int) -> None:
    cap = _cap(args)
    if k > cap:
        raise UsageError(f"k={k} exceeds the cap {cap}; raise it with --max-k-cap or {CAP_ENV}")
    if k > LARGE_K_WARNING:
        print(f"warning: k={k} may need a lot of time and memory", file=sys.stderr)


def _envelope(command: str, parameters: dict, result) -> str:
    return json.dumps(
        {"command": command, "parameters": parameters, "result": result, "toolVersion": __version__},
        sort_keys=True,
        indent=2,
    )


def _render_poly(poly: KerovPolynomial, fmt: str, command: str, parameters: dict) -> str:
    if fmt == "json":
        return _envelope(command, parameters, poly.to_json())
    if fmt == "latex":
        return poly.latex()
    return poly.text()


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_spin_kerov(args) -> int:
    k = args.k
    if k < 1 or k % 2 == 0:
        raise UsageError(f"--k must be an odd positive integer, got {k}")
    _check_k(args, k)
    poly = spin_kerov(k) if args.basis == "frak" else symmetrized_spin_kerov(k)
    _emit(args, _render_poly(poly, args.format, "spin-kerov", {"k": k, "basis": args.basis}))
    return EXIT_OK


def cmd_kerov(args) -> int:
    k = args.k
    if k < 1:
        raise UsageError(f"--k must be positive, got {k}")
    _check_k(args, k)
    _emit(args, _render_poly(ordinary_kerov(k), args.format, "kerov", {"k": k}))
    return EXIT_OK


def _record(k: int, family: str):
    return positivity_record(k, family)


def cmd_check(args) -> int:
    family, max_k = args.family, args.max_k
    if max_k < 1:
        raise UsageError("--max-k must be positive")
    _check_k(args, max_k)
    ks = list(range(1, max_k + 1, 2))
    records = {}
    if args.parallel and len(ks) > 1:
        with ProcessPoolExecutor() as pool:
            futures = {k: pool.submit(_record, k, family) for k in ks}
            for k in ks:
                records[k] = futures[k].result()
                print(f"[check] {family} k={k} done", file=sys.stderr)
    else:
        for k in ks:
            records[k] = _record(k, family)
            print(f"[check] {family} k={k} done", file=sys.stderr)

    code = EXIT_OK
    lines = []
    anchors = SPIN_KEROV if family == "spin" else SYMMETRIZED_KEROV
    for k in ks:
        rec = records[k]
        if k in anchors and rec.polynomial != KerovPolynomial.parse(anchors[k], family):
            print(f"error: {family} k={k} disagrees with the published value", file=sys.stderr)
            return EXIT_INTERNAL
        status = "all nonnegative integers" if rec.all_nonnegative and rec.all_integers else "offending terms"
        line = f"k={k}: {status}"
        if rec.offending:
            line += ": " + ", ".join(f"{m} ({fmt_rational(c)})" for m, c in rec.offending)
        if family == "spin" and k not in anchors:
            line += "  (finding: no published value)"
            if rec.offending:
                code = EXIT_FINDING
        lines.append(line)
    if family == "symmetrized" and 3 in records and records[3].all_integers:
        print("error: symmetrized k=3 should carry the coefficient 7/4", file=sys.stderr)
        return EXIT_INTERNAL

    if args.format == "json":
        text = _envelope(
            "check",
            {"family": family, "maxK": max_k},
            {"records": [records[k].to_json() for k in ks]},
        )
    else:
        text = "\n".join(lines)
        if family == "spin" and all(r.all_nonnegative and r.all_integers for r in records.values()):
            text += "\nall nonnegative integers"
    _emit(args, text)
    return code


EVAL_FUNCTIONS = ("spin-char", "spin-cumulant", "symmetrized-cumulant", "ordinary-char", "free-cumulant", "moment")


def cmd_eval(args) -> int:
    try:
        lam = parse_partition(args.partition)
    except ValueError as exc:
        raise UsageError(str(exc))
    k, fn = args.k, args.function
    if fn in ("spin-char", "spin-cumulant", "symmetrized-cumulant") and not is_strict(lam):
        raise UsageError(f"{fn} needs a strict partition, got {args.partition!r}")
    if fn == "spin-char":
        if k < 1 or k % 2 == 0:
            raise UsageError("spin-char needs odd k")
        value = spin_character_eval(k, lam)
    elif fn == "spin-cumulant":
        if k < 2 or k % 2:
            raise UsageError("spin-cumulant needs even k >= 2")
        value = spin_free_cumulant_eval(k, lam)
    elif fn == "symmetrized-cumulant":
        if k < 2:
            raise UsageError("symmetrized-cumulant needs k >= 2")
        value = symmetrized_cumulant_eval(k, lam)
    elif fn == "ordinary-char":
        if k < 1:
            raise UsageError("ordinary-char needs k >= 1")
        value = ordinary_character_eval(k, lam)
    elif fn == "free-cumulant":
        if k < 1:
            raise UsageError("free-cumulant needs k >= 1")
        value = Fraction(0) if k == 1 else biane_cumulant(lam, k)
    else:
        if k < 1:
            raise UsageError("moment needs k >= 1")
        value = transition_moments(lam, k)[k - 1]
    if args.format == "json":
        _emit(args, _envelope("eval", {"function": fn, "k": k, "partition": list(lam)}, fmt_rational(value)))
    else:
        _emit(args, fmt_rational(value))
    return EXIT_OK


def cmd_compare(args) -> int:
    k = args.k
    if k < 3 or k % 2 == 0:
        raise UsageError("compare needs odd k >= 3")
    _check_k(args, k)
    report = coincidence_report(k)
    if args.format == "json":
        _emit(args, _envelope("compare", {"k": k}, report.to_json()))
    else:
        _emit(args, report.text())
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    _emit(args, _envelope("oracle", {"n": args.n}, character_table(args.n).to_json()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinkerov", description="Exact spin Kerov polynomials.")
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write the result to PATH instead of stdout")
    common.add_argument("--max-k-cap", type=int, default=None, help=f"override the k cap (env {CAP_ENV})")
    fmt3 = argparse.ArgumentParser(add_help=False)
    fmt3.add_argument("--format", choices=("text", "json", "latex"), default="text")
    fmt2 = argparse.ArgumentParser(add_help=False)
    fmt2.add_argument("--format", choices=("text", "json"), default="text")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spin-kerov", parents=[common, fmt3], help="spin Kerov polynomial")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--basis", choices=("frak", "symmetrized"), default="frak")
    p.set_defaults(func=cmd_spin_kerov)

    p = sub.add_parser("kerov", parents=[common, fmt3], help="ordinary Kerov polynomial")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_kerov)

    p = sub.add_parser("check", parents=[common, fmt2], help="positivity / integrality sweep")
    p.add_argument("--max-k", type=int, default=13)
    p.add_argument("--family", choices=("spin", "symmetrized"), default="spin")
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", parents=[common, fmt2], help="evaluate a function at a partition")
    p.add_argument("--function", choices=EVAL_FUNCTIONS, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--partition", required=True, help='comma-separated parts, e.g. "5,4,2,1"')
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("compare", parents=[common, fmt2], help="ordinary vs spin coefficient comparison")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("oracle", parents=[common], help="dump the spin character table X^lam_rho")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"spinkerov {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - exit-code contract
        print(f"spinkerov {args.command}: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
