"""Command-line surface: batch verification and canonical serializations.

Data goes to stdout (report JSON lines, CSV/JSON tables, canonical
polynomial text); diagnostics go to stderr.  Exit status: 0 all checks
passed, 1 at least one check failed, 2 configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import partitions, recurrence, verify
from .partitions import B0_433, GeneralParams

_SUITE_DEFAULT_N = {
    "lemma1": 6,
    "link": 5,
    "lemma2": 4,
    "lemma3": 4,
    "lemma4": 4,
    "oracle": 4,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sixfold",
        description="Exact verification engine for a mod-6 family of partition identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run verification suites; one JSON report line per check")
    p.add_argument(
        "--suite",
        choices=["all", "lemma1", "lemma2", "lemma3", "lemma4", "link", "oracle", "theorem3"],
        default="all",
    )
    p.add_argument("--n-max", type=int, default=None, help="largest level checked (suite default if omitted)")
    p.add_argument("--q-max", type=int, default=50, help="q bound for the table/product checks")

    p = sub.add_parser("counts", help="exhaustive (mu, nu, N) count table for one side")
    p.add_argument("--side", choices=["A", "B"], required=True)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("series", help="one windowed series, from either computation path")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True, help="top-window class bound, 0..15")
    p.add_argument("--source", choices=["oracle", "recurrence"], default="oracle")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("general", help="desk check of one general-family case")
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--extra", choices=["none", "b0-433", "b0-533"], default="none")
    p.add_argument("--n-max", type=int, default=40)

    p = sub.add_parser("product", help="truncated product of the side-A generating factors")
    p.add_argument("--q-max", type=int, default=50)

    return parser


def _emit(reports: list[verify.Report]) -> int:
    for r in reports:
        print(r.to_json_line())
        if not r.passed:
            why = r.detail or f"{r.residual_terms} residual terms"
            print(f"FAIL {r.identity} n={r.n}: {why}", file=sys.stderr)
            for line in r.diff:
                print(f"  {line}", file=sys.stderr)
    return 0 if verify.all_passed(reports) else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.n_max is not None and args.n_max < 0:
        raise verify.ConfigError("--n-max must be >= 0")
    if args.suite == "all":
        overrides = {}
        if args.n_max is not None:
            overrides = {
                "n_max_lemmas": args.n_max,
                "n_max_fourth_order": args.n_max,
                "n_max_oracle": args.n_max,
            }
        cfg = verify.SuiteConfig(q_max_theorem=args.q_max, **overrides)
        return _emit(verify.run_all(cfg))
    if args.suite == "theorem3":
        return _emit([verify.theorem3_check(args.q_max)])
    n_max = args.n_max if args.n_max is not None else _SUITE_DEFAULT_N[args.suite]
    memo = recurrence.SeriesMemo()
    suites = {
        "lemma1": verify.suite_lemma1,
        "lemma2": verify.suite_lemma2,
        "lemma3": verify.suite_lemma3,
        "lemma4": verify.suite_lemma4,
        "link": verify.suite_link,
        "oracle": verify.suite_oracle,
    }
    return _emit(suites[args.suite](n_max, memo))


def _cmd_counts(args: argparse.Namespace) -> int:
    table = partitions.count_table(args.side, args.n_max)
    if args.format == "csv":
        print(table.to_csv())
    else:
        print(json.dumps(table.to_json_rows()))
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    if args.n < -1:
        raise ValueError(f"--n must be >= -1, got {args.n}")
    if args.source == "oracle":
        poly = partitions.s_oracle(args.n, args.j)
    else:
        poly = recurrence.s_rec(args.n, args.j)
    if args.format == "text":
        print(poly.to_text())
    else:
        print(json.dumps(poly.to_json_terms()))
    return 0


def _cmd_general(args: argparse.Namespace) -> int:
    gp = GeneralParams(args.lam, args.k, args.a)
    if args.extra == "none":
        report = verify.theorem1_check(gp, args.n_max)
    elif args.extra == B0_433:
        if gp != GeneralParams(4, 3, 3):
            raise verify.ConfigError("--extra b0-433 requires --lambda 4 --k 3 --a 3")
        report = verify.conj433_check(args.n_max)
    else:
        if gp != GeneralParams(5, 3, 3):
            raise verify.ConfigError("--extra b0-533 requires --lambda 5 --k 3 --a 3")
        report = verify.thm2_consistency(args.n_max)
    return _emit([report])


def _cmd_product(args: argparse.Namespace) -> int:
    print(recurrence.product_truncated(args.q_max).to_text())
    return 0


_HANDLERS = {
    "verify": _cmd_verify,
    "counts": _cmd_counts,
    "series": _cmd_series,
    "general": _cmd_general,
    "product": _cmd_product,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:  # includes ConfigError
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
