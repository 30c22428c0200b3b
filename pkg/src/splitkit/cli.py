"""Command-line interface.

JSON goes to stdout; exit code 0 on success, 2 on inadmissible input,
3 on an internal verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .construct import construct_d3, construct_quadric, construct_quadric_low_corank, smooth_along_curve
from .errors import (
    InadmissibleType,
    LSearchExhausted,
    NotInIdeal,
    ParseError,
    SplitkitError,
    VerificationFailed,
    ZeroMap,
)
from .mpoly import MPoly
from .normalmap import psi_from_poly
from .rnc import CurveContext
from .sampler import SampleConfig, sample_distribution
from .scalars import DEFAULT_PRIME, Field
from .splitting import SplitType, entries_gcd, enumerate_types, splitting_type
from .strata import CSV_COLUMNS, census, quadric_phi_dims, stratum_report


def _parse_field(text: str) -> Field:
    if text == "q":
        return Field.rationals()
    if text.startswith("p:"):
        return Field.prime(int(text[2:]))
    raise ParseError(f"bad field spec {text!r}; use 'q' or 'p:PRIME'")


def _parse_type(text: str) -> SplitType:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    try:
        return SplitType.of(int(p) for p in parts)
    except ValueError as exc:
        raise ParseError(f"bad splitting type {text!r}") from exc


def _emit(data) -> None:
    json.dump(data, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _add_common(sub, field_default="q"):
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--e", type=int, required=True)
    sub.add_argument("--d", type=int, required=True)
    sub.add_argument("--field", default=field_default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitkit",
        description="Kernel splitting types of rational normal curves on hypersurfaces.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("construct", help="build a hypersurface realizing a target type")
    _add_common(p)
    p.add_argument("--type", required=True, help='target degrees, e.g. "7,6,5"')
    p.add_argument("--low-corank", action="store_true", help="minimize the quadric corank (d = 2 only)")
    p.add_argument("--seed", type=int, default=0)

    p = subs.add_parser("split", help="splitting type of an explicit polynomial")
    _add_common(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--poly", help="file holding one polynomial in text form")
    group.add_argument("--poly-inline", help="polynomial text, e.g. 'x1^2 - x0*x2'")

    p = subs.add_parser("enumerate", help="all admissible splitting types")
    _add_common(p)

    p = subs.add_parser("census", help="stratum reports for all admissible types")
    _add_common(p)
    p.add_argument("--csv", help="also write the census as CSV to this path")

    p = subs.add_parser("sample", help="seeded Monte-Carlo splitting-type frequencies")
    _add_common(p, field_default=f"p:{DEFAULT_PRIME}")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--threads", type=int, default=None)

    p = subs.add_parser("dims", help="stratum dimension formulas")
    _add_common(p)
    p.add_argument("--type", help="report a single type instead of the whole census")

    p = subs.add_parser("verify", help="construct and check every admissible type")
    _add_common(p)

    return parser


def _make_ctx(args) -> CurveContext:
    return CurveContext(args.n, args.e, _parse_field(args.field))


def _cmd_construct(args) -> int:
    ctx = _make_ctx(args)
    target = _parse_type(args.type)
    if args.low_corank and args.d != 2:
        raise InadmissibleType("--low-corank applies to d = 2 only")
    if args.d == 2:
        if args.low_corank:
            report = construct_quadric_low_corank(ctx, target, seed=args.seed)
        else:
            report = construct_quadric(ctx, target)
    else:
        report = construct_d3(ctx, args.d, target)
    _emit(report.to_json())
    return 0


def _cmd_split(args) -> int:
    ctx = _make_ctx(args)
    if args.poly:
        with open(args.poly, encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = args.poly_inline
    F = MPoly.from_text(ctx.field, args.n, text, degree=args.d)
    psi = psi_from_poly(ctx, args.d, F)
    st = splitting_type(psi)
    _emit(
        {
            "psi": psi.to_json(),
            "splitting": st.to_json(),
            "gcd_degree": entries_gcd(psi).degree,
            "total_degree": st.total,
            "smooth_along_curve": smooth_along_curve(ctx, F),
        }
    )
    return 0


def _cmd_enumerate(args) -> int:
    _make_ctx(args)
    types = enumerate_types(args.n, args.e, args.d)
    _emit({"types": [list(t.degrees) for t in types]})
    return 0


def _cmd_census(args) -> int:
    ctx = _make_ctx(args)
    reports = census(ctx, args.d)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(CSV_COLUMNS)
            writer.writerows(r.csv_row() for r in reports)
    _emit({"census": [r.to_json() for r in reports]})
    return 0


def _cmd_sample(args) -> int:
    ctx = _make_ctx(args)
    cfg = SampleConfig(ctx, args.d, args.trials, args.seed, args.threads)
    table = sample_distribution(cfg)
    _emit(table.to_json())
    return 0


def _cmd_dims(args) -> int:
    ctx = _make_ctx(args)
    if args.type:
        report = stratum_report(ctx, args.d, _parse_type(args.type))
        payload = {"report": report.to_json()}
    else:
        payload = {"reports": [r.to_json() for r in census(ctx, args.d)]}
    if args.d == 2:
        payload["quadric_phi"] = quadric_phi_dims(ctx)
    _emit(payload)
    return 0


def _cmd_verify(args) -> int:
    ctx = _make_ctx(args)
    failures = []
    types = enumerate_types(args.n, args.e, args.d)
    for target in types:
        if args.d == 2:
            report = construct_quadric(ctx, target)
        else:
            report = construct_d3(ctx, args.d, target)
        expected_total = args.e * (args.n - args.d + 1) - 2
        if report.achieved != target:
            failures.append({"target": list(target.degrees), "reason": "splitting mismatch"})
        elif not report.smooth_along_C:
            failures.append({"target": list(target.degrees), "reason": "singular along curve"})
        elif report.achieved.total != expected_total:
            failures.append({"target": list(target.degrees), "reason": "degree identity"})
    _emit({"n": args.n, "e": args.e, "d": args.d, "cases": len(types), "failures": failures})
    return 3 if failures else 0


_HANDLERS = {
    "construct": _cmd_construct,
    "split": _cmd_split,
    "enumerate": _cmd_enumerate,
    "census": _cmd_census,
    "sample": _cmd_sample,
    "dims": _cmd_dims,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (InadmissibleType, NotInIdeal, ZeroMap, ParseError, ValueError, OSError) as exc:
        json.dump({"error": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    except (VerificationFailed, LSearchExhausted, AssertionError, SplitkitError) as exc:
        json.dump({"error": f"internal verification failure: {exc}"}, sys.stderr)
        sys.stderr.write("\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
