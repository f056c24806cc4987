"""Command-line surface.

Subcommands: constants, kfun, hsum, dips, validate-zeros, identities.
Exit codes: 0 success, 1 invariant violation, 2 input error, 3 numeric
domain error, 4 resource/budget exceeded.  All numbers print with 17
significant digits so output round-trips to the same floats.
"""
from __future__ import annotations

import argparse
import csv
import math
import sys

from .combinatorics import balanced_coefficient
from .config import default_zeros_path, load_config
from .correlation import build_report, parse_tuple_text, routes_agree
from .quadrature import sinc_product_constant
from .dips import (
    deep_minima,
    match_to_zeros,
    profile_grid,
    records_json,
    scan_minima,
    write_profile_csv,
)
from .errors import BudgetError, DataError, DomainError, ResourceError
from .identities import run_identity_suite
from .arithmetic import SIEVE_LIMIT_CAP, sieve_mangoldt
from .series import SeriesConfig, required_limit_estimate
from .weights import gaussian_triplet
from .zeros import load_zeros, validate_zero_table

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_DOMAIN = 3
EXIT_BUDGET = 4


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _sieve_for(tuples, tol: float):
    sigma = min(t.positive_sum for t in tuples)
    m = max(t.m for t in tuples)
    need = required_limit_estimate(float(sigma), m, tol)
    if need > SIEVE_LIMIT_CAP:
        raise ResourceError(
            f"series tolerance {tol:g} needs a sieve limit of about {need}, "
            f"beyond the cap {SIEVE_LIMIT_CAP}"
        )
    return sieve_mangoldt(max(min(need * 2, SIEVE_LIMIT_CAP), 10**4))


def _cmd_constants(args) -> int:
    if args.tuple is None and args.r_max is None:
        print("constants: provide --r-max or --tuple", file=sys.stderr)
        return EXIT_INPUT
    if args.r_max is not None:
        print("r  c_pi_power  value")
        for r in range(1, args.r_max + 1):
            c = balanced_coefficient(r)
            print(f"{r}  {c.numerator}/{c.denominator}  {_fmt(float(c))}")
    if args.tuple is not None:
        tup = parse_tuple_text(args.tuple)
        result = sinc_product_constant(tup, tol=1e-10)
        d_val = (-1.0) ** tup.m * result.value / (2.0 * math.pi) ** tup.m
        print(f"tuple {tup}  m={tup.m}  S={tup.positive_sum}")
        print(f"C  {_fmt(result.value)}  (claimed error {_fmt(result.total_error)})")
        print(f"D  {_fmt(d_val)}")
    return EXIT_OK


DEFAULT_CURVE_TUPLES = ("1,1,-2", "1,1,-1,-1", "1,2,-3")


def _cmd_kfun(args) -> int:
    chosen = args.tuple if args.tuple else list(DEFAULT_CURVE_TUPLES)
    tuples = [parse_tuple_text(text) for text in chosen]
    if not args.step > 0:
        raise ValueError("step must be positive")
    table = _sieve_for(tuples, args.tolerance)
    cfg = SeriesConfig(tolerance=args.tolerance)
    ts, columns = profile_grid(tuples, args.t_lo, args.t_hi, args.step, table, cfg)
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            write_profile_csv(fh, ts, columns)
    else:
        write_profile_csv(sys.stdout, ts, columns)
    return EXIT_OK


def _cmd_hsum(args) -> int:
    cfg = load_config(args.config)
    zeros = load_zeros(cfg.zeros_path)
    h = gaussian_triplet(cfg.h_center, cfg.h_width)
    series_cfg = SeriesConfig(tolerance=cfg.series_tolerance)
    table = _sieve_for(cfg.tuples, cfg.series_tolerance)
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    rows = []
    agree = True
    for tup in cfg.tuples:
        for t_max in cfg.t_list:
            report = build_report(
                h,
                tup,
                t_max,
                zeros,
                table,
                series_cfg,
                tol=cfg.quadrature_tolerance,
                workers=args.threads,
            )
            out = cfg.output_dir / f"report_{tup.compact}_{t_max:g}.json"
            out.write_text(report.to_json(), encoding="utf-8")
            print(out)
            rows.append(report.csv_row())
            agree = agree and routes_agree(report)
    csv_path = cfg.output_dir / "reports.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
    print(csv_path)
    if not agree:
        print("route agreement violated", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_dips(args) -> int:
    tup = parse_tuple_text(args.tuple)
    zeros = load_zeros(args.zeros or default_zeros_path())
    table = _sieve_for([tup], args.tolerance)
    cfg = SeriesConfig(tolerance=args.tolerance)
    records = scan_minima(tup, args.t_lo, args.t_hi, args.step, table, cfg)
    if args.deep_only:
        records = deep_minima(records)
    records = match_to_zeros(records, zeros, window=args.window)
    print(records_json(records))
    return EXIT_OK


def _cmd_validate_zeros(args) -> int:
    table = load_zeros(args.path or default_zeros_path())
    report = validate_zero_table(table)
    print(report.to_json())
    return EXIT_OK if report.all_ok else EXIT_VIOLATION


def _cmd_identities(args) -> int:
    result = run_identity_suite(
        seed=args.seed, iterations=args.iters, b_limit=args.b_limit
    )
    print(f"max scaled residual (multinomial): {_fmt(result.max_scaled_residual_multinomial)}")
    print(f"max scaled residual (signed power): {_fmt(result.max_scaled_residual_power)}")
    print(f"max relative gap (cosh expansion): {_fmt(result.max_relative_gap_cosh)}")
    print(f"inverse-convolution values checked: {result.b_inverse_checked}")
    for violation in result.violations:
        print(f"VIOLATION: {violation}", file=sys.stderr)
    return EXIT_OK if result.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetacorr",
        description="Correlation sums over zeta zero ordinates and their constants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="exact coefficient table / tuple constants")
    p.add_argument("--r-max", type=int, default=None)
    p.add_argument("--tuple", type=str, default=None)
    p.set_defaults(func=_cmd_constants)

    p = sub.add_parser("kfun", help="emit profile curves y(t) as CSV")
    p.add_argument("--tuple", action="append", default=None)
    p.add_argument("--t-lo", type=float, default=10.0)
    p.add_argument("--t-hi", type=float, default=40.0)
    p.add_argument("--step", type=float, default=0.02)
    p.add_argument("--tolerance", type=float, default=1e-3)
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=_cmd_kfun)

    p = sub.add_parser("hsum", help="run the correlation pipeline from a config")
    p.add_argument("--config", required=True)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_hsum)

    p = sub.add_parser("dips", help="scan profile minima and match to ordinates")
    p.add_argument("--tuple", required=True)
    p.add_argument("--t-lo", type=float, default=10.0)
    p.add_argument("--t-hi", type=float, default=40.0)
    p.add_argument("--step", type=float, default=0.02)
    p.add_argument("--window", type=float, default=0.5)
    p.add_argument("--tolerance", type=float, default=1e-3)
    p.add_argument("--zeros", type=str, default=None)
    p.add_argument("--deep-only", action="store_true")
    p.set_defaults(func=_cmd_dips)

    p = sub.add_parser("validate-zeros", help="zero-count checkpoints vs asymptotic")
    p.add_argument("path", nargs="?", default=None)
    p.set_defaults(func=_cmd_validate_zeros)

    p = sub.add_parser("identities", help="randomized exact-identity suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=100)
    p.add_argument("--b-limit", type=int, default=10**4)
    p.set_defaults(func=_cmd_identities)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (DataError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetError, ResourceError) as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
