"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 when any check fails,
2 on usage or I/O errors.  All output is deterministic; there is no
randomness anywhere in the pipeline.
"""

from __future__ import annotations

import argparse
import sys

from . import checks, hookgf, injections
from .series import csv_lines

SERIES_NAMES = ("bt1", "bt2", "bt3", "A", "B", "C", "D", "E", "F")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hooks",
        description="Hook-length counts over t-regular partitions, two ways, "
        "with mechanical verification of the related identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="one hook count b(t, k, n)")
    p_count.add_argument("--t", type=int, required=True)
    p_count.add_argument("--k", type=int, required=True)
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--method", choices=("enum", "gf"), default="enum")

    p_series = sub.add_parser("series", help="emit a named series as CSV")
    p_series.add_argument("--name", choices=SERIES_NAMES, required=True)
    p_series.add_argument("--t", type=int, required=True)
    p_series.add_argument("--order", type=int, required=True)
    p_series.add_argument("--format", choices=("csv",), default="csv")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    vsub = p_verify.add_subparsers(dest="verify_what", required=True)

    p_ident = vsub.add_parser("identity", help="decomposition identities")
    p_ident.add_argument("--which", choices=("abc", "def"), required=True)
    p_ident.add_argument("--t", type=int, required=True)
    p_ident.add_argument("--order", type=int, default=200)
    p_ident.add_argument("--format", choices=("json", "csv", "human"), default="human")

    p_inj = vsub.add_parser("injection", help="certify an injection exhaustively")
    p_inj.add_argument("--map", choices=injections.MAP_IDS, required=True)
    p_inj.add_argument("--t", type=int, required=True)
    p_inj.add_argument("--n-max", type=int, required=True)
    p_inj.add_argument("--format", choices=("json", "csv", "human"), default="human")

    p_thm = vsub.add_parser("theorem", help="theorem-level sign checks")
    p_thm.add_argument(
        "--which", choices=("thm12", "thm13", "d", "e", "f", "oracle"), required=True
    )
    p_thm.add_argument("--t", type=int, default=2, help="for thm12")
    p_thm.add_argument("--order", type=int, default=None)
    p_thm.add_argument("--t-max", type=int, default=None)
    p_thm.add_argument("--n-max", type=int, default=None)
    p_thm.add_argument("--k-max", type=int, default=3, help="for oracle")
    p_thm.add_argument(
        "--full",
        action="store_true",
        help="for thm12 with t >= 3: extend the order to the theorem bound "
        "(long batch job)",
    )
    p_thm.add_argument("--format", choices=("json", "csv", "human"), default="human")

    return parser


def _cmd_count(args) -> int:
    if args.method == "enum":
        hc = hookgf.btk_enum(args.t, args.k, args.n)
    else:
        hc = hookgf.btk_gf(args.t, args.k, args.n)
    print(hc.value)
    return 0


def _cmd_series(args) -> int:
    if args.name in ("bt1", "bt2", "bt3"):
        s = hookgf.btk_series(args.t, int(args.name[-1]), args.order).series
    else:
        s = hookgf.decomposition_series(args.name, args.t, args.order).series
    for line in csv_lines(s):
        print(line)
    return 0


def _cmd_verify_identity(args) -> int:
    check = checks.run_identity_check(args.which, (args.t,), args.order)
    checks.emit(check, args.format, sys.stdout)
    return 0 if check.passed else 1


def _cmd_verify_injection(args) -> int:
    reports = injections.verify_injection_range(args.map, args.t, args.n_max)
    checks.emit(reports, args.format, sys.stdout)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_verify_theorem(args) -> int:
    which = args.which
    if which == "thm12":
        order = args.order
        if args.full:
            bound = injections.o5_weight_bound(args.t) + 1
            order = max(order or 0, bound + 100)
        elif order is None:
            order = 3100 if args.t == 2 else 2000
        check = checks.run_thm12(args.t, order)
    elif which == "thm13":
        check = checks.run_thm13(args.t_max or 10, args.n_max or 60)
    elif which in ("d", "e", "f"):
        ts = tuple(range(2, (args.t_max or 4) + 1))
        check = checks.run_sign_check(which.upper(), ts, args.order or 200)
    else:
        check = checks.run_oracle_crosscheck(
            args.t_max or 6, args.n_max or 40, tuple(range(1, args.k_max + 1))
        )
    checks.emit(check, args.format, sys.stdout)
    return 0 if check.passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "series":
            return _cmd_series(args)
        if args.verify_what == "identity":
            return _cmd_verify_identity(args)
        if args.verify_what == "injection":
            return _cmd_verify_injection(args)
        return _cmd_verify_theorem(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
