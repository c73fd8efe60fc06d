"""Command-line surface: protocol simulation with oracle checks, table
reproduction, the cbit staircase, and the nonlocality success curve.

Exit codes: 0 on success, 1 when an oracle comparison fails, 2 on a
usage error.  All output is deterministic for a given configuration and
seed; the default seed is 42 and must be overridden explicitly (there
is deliberately no environment-variable override).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .errors import SpinsimError
from .mc import compare_to_oracle, estimate, exact_targets
from .nonlocality import success_curve
from .output import records_to_jsonl, rows_to_csv
from .protocols import BinaryRecursive, NonMaxEntangled, PAdicComposite, TonerBacon
from .spin_core import Spin
from .tables import staircase_rows, table1_rows, table2_rows, table3_rows, table4_rows

DEFAULT_SEED = 42


class UsageError(Exception):
    pass


def _parse_direction(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"direction must be a comma triple, got {text!r}")
    v = np.array([float(p) for p in parts])
    norm = np.linalg.norm(v)
    if norm == 0:
        raise UsageError("direction must be nonzero")
    return v / norm


def _parse_spin(text: str) -> Spin:
    try:
        return Spin.of(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad spin {text!r}: {exc}") from exc


def _build_protocol(args):
    if args.protocol == "toner-bacon":
        return TonerBacon()
    if args.protocol == "binary":
        if args.s is None:
            raise UsageError("--protocol binary requires --s")
        return BinaryRecursive(_parse_spin(args.s))
    if args.protocol == "padic":
        if args.P is None or args.n is None:
            raise UsageError("--protocol padic requires --P and --n")
        return PAdicComposite(args.P, args.n)
    if args.protocol == "nonmax":
        if args.gamma is None:
            raise UsageError("--protocol nonmax requires --gamma")
        return NonMaxEntangled(args.gamma)
    raise UsageError(f"unknown protocol {args.protocol!r}")


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _record_header(command: str, config: dict, seed) -> dict:
    return {"command": command, "version": __version__, "seed": seed,
            "config": config}


def cmd_simulate(args) -> int:
    protocol = _build_protocol(args)
    a = _parse_direction(args.a)
    b = _parse_direction(args.b)
    est = estimate(protocol, protocol.spin, a, b, args.rounds, args.seed,
                   workers=args.workers)
    targets = exact_targets(protocol, a, b)
    comparisons = [
        compare_to_oracle(est, targets[q], args.threshold, quantity=q)
        for q in ("alphabeta", "alpha", "beta")
    ]
    config = {
        "protocol": args.protocol, "s": str(protocol.spin),
        "a": [float(x) for x in a], "b": [float(x) for x in b],
        "rounds": args.rounds, "threshold": args.threshold,
        "workers": args.workers or 1, "format": args.format,
    }
    if args.format == "json":
        records = [_record_header("simulate", config, args.seed)]
        records.append({"estimate": est.to_dict()})
        records.extend(c.to_dict() for c in comparisons)
        _emit(records_to_jsonl(records), args.out)
    else:
        rows = [c.to_dict() for c in comparisons]
        _emit(rows_to_csv(rows), args.out)
    return 0 if all(c.passed for c in comparisons) else 1


def cmd_tables(args) -> int:
    builders = {1: table1_rows, 2: table2_rows, 3: table3_rows, 4: table4_rows}
    rows = builders[args.table]()
    if args.format == "json":
        config = {"table": args.table, "format": args.format}
        records = [_record_header("tables", config, args.seed)]
        records.extend(rows)
        _emit(records_to_jsonl(records), args.out)
    else:
        _emit(rows_to_csv(rows), args.out)
    return 0


def cmd_staircase(args) -> int:
    rows = staircase_rows(Fraction(args.s_min), Fraction(args.s_max))
    for row in rows:
        if row["protocol2_cbits"] is None:
            row["protocol2_cbits"] = row["protocol1_cbits"]
    if args.format == "json":
        config = {"s_min": args.s_min, "s_max": args.s_max, "format": args.format}
        records = [_record_header("staircase", config, args.seed)]
        records.extend(rows)
        _emit(records_to_jsonl(records), args.out)
    else:
        _emit(rows_to_csv(rows), args.out)
    return 0


def cmd_nonlocality(args) -> int:
    grid = np.linspace(0.02, 1.0, args.grid)
    rows = success_curve(grid)
    if args.format == "json":
        config = {"grid": args.grid, "format": args.format}
        records = [_record_header("nonlocality", config, args.seed)]
        records.extend(rows)
        _emit(records_to_jsonl(records), args.out)
    else:
        _emit(rows_to_csv(rows), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinsim",
        description="Classical simulation of spin-s singlet correlations and "
                    "temporal/nonlocality inequality maximization.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--format", choices=("csv", "json"), default="json")
        p.add_argument("--out", default=None)

    sim = sub.add_parser("simulate", help="run a protocol and compare to the exact oracle")
    sim.add_argument("--protocol", required=True,
                     choices=("toner-bacon", "binary", "padic", "nonmax"))
    sim.add_argument("--s", default=None, help="spin as a fraction, e.g. 5/2")
    sim.add_argument("--P", type=int, default=None)
    sim.add_argument("--n", type=int, default=None)
    sim.add_argument("--gamma", type=float, default=None)
    sim.add_argument("--a", required=True, help="Alice direction as x,y,z")
    sim.add_argument("--b", required=True, help="Bob direction as x,y,z")
    sim.add_argument("--rounds", type=int, default=1_000_000)
    sim.add_argument("--threshold", type=float, default=4.0)
    sim.add_argument("--workers", type=int, default=None)
    common(sim)
    sim.set_defaults(func=cmd_simulate)

    tab = sub.add_parser("tables", help="recompute a published table with references")
    tab.add_argument("--table", type=int, required=True, choices=(1, 2, 3, 4))
    common(tab)
    tab.set_defaults(func=cmd_tables)

    stair = sub.add_parser("staircase", help="cbit counts of both protocols per spin")
    stair.add_argument("--s-min", default="1/2")
    stair.add_argument("--s-max", default="3")
    common(stair)
    stair.set_defaults(func=cmd_staircase)

    non = sub.add_parser("nonlocality", help="Hardy/Cabello success-probability curve")
    non.add_argument("--grid", type=int, default=50)
    common(non)
    non.set_defaults(func=cmd_nonlocality)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SpinsimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
