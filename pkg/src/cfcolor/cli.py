"""Command-line entry point.

Exit codes: 0 success, 1 negative answer (violation, NO, failed check),
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bench as bench_mod
from .certificate import CertificateError, extract_certificate
from .core import FormatError, format_coloring, format_instance, parse_coloring, parse_instance
from .exact import BudgetExceeded, SearchStats, brute_force_chi, brute_force_witness, chi_cf, decide_cf, solve_cf
from .greedy import cf_color, color_count
from .instances import gen_full, gen_ik, gen_lk, gen_random
from .verify import LengthMismatch, contains_configuration, is_conflict_free, is_jk_configuration

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _load_instance(path: str):
    try:
        return parse_instance(_read(path))
    except FormatError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _emit_stats(stats: list[SearchStats], out) -> None:
    for st in stats:
        for rec in st.records():
            out.write(json.dumps(rec, sort_keys=True) + "\n")


def cmd_gen(args, out) -> int:
    if args.family == "ik":
        instance = gen_ik(_need(args.k, "--k")).instance
    elif args.family == "lk":
        instance = gen_lk(_need(args.k, "--k"))
    elif args.family == "full":
        instance = gen_full(_need(args.n, "--n"))
    else:
        instance = gen_random(_need(args.n, "--n"), _need(args.m, "--m"), _need(args.seed, "--seed"))
    out.write(format_instance(instance))
    return EXIT_OK


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required for this family")
    return value


def cmd_color(args, out) -> int:
    instance = _load_instance(args.instance)
    coloring, trace = cf_color(instance)
    out.write(format_coloring(coloring))
    if args.trace:
        out.write(trace.to_json() + "\n" if args.json else trace.report())
    return EXIT_OK


def cmd_verify(args, out) -> int:
    instance = _load_instance(args.instance)
    try:
        coloring = parse_coloring(_read(args.coloring))
        result = is_conflict_free(instance, coloring)
    except (FormatError, LengthMismatch) as exc:
        raise UsageError(f"{args.coloring}: {exc}") from exc
    out.write(f"{result}\n")
    return EXIT_OK if result else EXIT_NEGATIVE


def cmd_decide(args, out) -> int:
    instance = _load_instance(args.instance)
    stats = SearchStats()
    ok = decide_cf(instance, args.k, stats)
    out.write("YES\n" if ok else "NO\n")
    if args.stats:
        _emit_stats([stats], out)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_chi(args, out) -> int:
    instance = _load_instance(args.instance)
    stats: list[SearchStats] = []
    if args.method == "brute":
        k = brute_force_chi(instance)
        witness = brute_force_witness(instance, k) if args.witness else None
    else:
        k = chi_cf(instance, stats)
        witness = solve_cf(instance, k) if args.witness else None
    out.write(f"{k}\n")
    if witness is not None:
        out.write(format_coloring(witness))
    if args.stats:
        _emit_stats(stats, out)
    return EXIT_OK


def cmd_cert(args, out) -> int:
    instance = _load_instance(args.instance)
    coloring, trace = cf_color(instance)
    k = color_count(coloring)
    if k == 0:
        out.write("0\n")
        return EXIT_OK
    cert = extract_certificate(instance, trace)
    out.write(f"{cert.depth}\n")
    out.write(cert.render())
    if args.check:
        ok = is_jk_configuration(cert.intervals(), cert.depth) and contains_configuration(instance, cert.intervals())
        out.write("CHECK OK\n" if ok else "CHECK FAILED\n")
        return EXIT_OK if ok else EXIT_NEGATIVE
    return EXIT_OK


def cmd_bench(args, out) -> int:
    lo = args.min_k if args.min_k is not None else args.min_n
    hi = args.max_k if args.max_k is not None else args.max_n
    if lo is None or hi is None:
        raise UsageError("bench needs a parameter range (--min-k/--max-k or --min-n/--max-n)")
    try:
        records = bench_mod.bench_family(args.family, lo, hi, args.opt_up_to, m=args.m, seed=args.seed or 0)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        for rec in records:
            out.write(rec.to_json() + "\n")
    else:
        out.write(f"{'family':<7}{'param':>6}{'n':>8}{'m':>8}{'alg':>5}{'opt':>5}{'ratio':>7}{'active':>8}{'time':>9}\n")
        for r in records:
            opt = "-" if r.opt_colors is None else str(r.opt_colors)
            ratio = "-" if r.ratio is None else f"{float(r.ratio):.2f}"
            out.write(
                f"{r.family:<7}{r.parameter:>6}{r.n:>8}{r.m:>8}{r.alg_colors:>5}{opt:>5}{ratio:>7}{r.activated:>8}{r.wall_time:>9.4f}\n"
            )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfcolor", description="Conflict-free coloring of interval hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write an instance in text format")
    p.add_argument("--family", choices=bench_mod.FAMILIES, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("color", help="greedy hitting-set coloring")
    p.add_argument("instance")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true", help="trace as JSON")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring")
    p.add_argument("instance")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decide", help="is there a coloring with colors 0..K")
    p.add_argument("instance")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("chi", help="minimum number of positive colors")
    p.add_argument("instance")
    p.add_argument("--method", choices=("frontier", "brute"), default="frontier")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("cert", help="lower-bound certificate from the greedy trace")
    p.add_argument("instance")
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_cert)

    p = sub.add_parser("bench", help="greedy vs optimal over a family")
    p.add_argument("--family", choices=bench_mod.FAMILIES, required=True)
    p.add_argument("--min-k", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--min-n", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--opt-up-to", type=int, default=bench_mod.DEFAULT_OPT_UP_TO)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def run_command(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args, out)
    except (UsageError, OSError, BudgetExceeded, CertificateError, ValueError) as exc:
        print(f"cfcolor: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
