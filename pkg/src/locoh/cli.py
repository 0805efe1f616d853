"""Command-line front end.

Subcommands: ``present`` (print a presentation matrix), ``hilbert`` (tabulate
component lengths over a degree window), ``vanish`` (two-route vanishing
check), ``fit`` (reverse-polynomial fit or refutation), ``compare``
(characteristic 0 vs p), ``tridiag`` (determinant table of the comparison
matrices), and ``content`` (content generators with unit and cofiniteness
flags).

Exit codes: 0 success, 2 input error, 3 infinite length, 4 internal theorem
violation.  The environment variable LOCOH_MAX_DEGREE overrides the strand
engine's stabilization ceiling.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .cohomology import (
    CohomologyQuery,
    FittedPolynomial,
    Refutation,
    builtin_ideal,
    char_comparison,
    comparison_to_csv_rows,
    comparison_to_json_dict,
    content_is_unit,
    fit_reverse_polynomial,
    hilbert_table,
    minimal_primes_report,
    table_to_csv_rows,
    table_to_json_dict,
    tridiag_det,
    vanishes,
)
from .errors import (
    DegreeTooSmall,
    DomainMismatch,
    InsufficientData,
    LengthMismatch,
    LocohError,
    NotAField,
    NotFiniteLength,
    NotHomogeneous,
    OutOfRange,
    ParseError,
    RingMismatch,
    RouteDisagreement,
    SizeTooLarge,
    TheoremViolation,
    TooManyMinors,
)
from .groebner import is_cofinite
from .multipoly import (
    CoefficientRing,
    URing,
    content_ideal,
    parse_ideal,
    required_variable_counts,
)
from .presentation import presentation_matrix
from .scalars import GF, QQ, ZZ

_INPUT_ERRORS = (
    ParseError,
    DegreeTooSmall,
    OutOfRange,
    DomainMismatch,
    NotHomogeneous,
    RingMismatch,
    LengthMismatch,
    SizeTooLarge,
    TooManyMinors,
    NotAField,
    InsufficientData,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locoh",
        description="Exact graded components of top local cohomology modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_flags(p, with_builtin=True):
        if with_builtin:
            p.add_argument("--builtin", choices=("singh", "section3", "remark16"))
        p.add_argument("--ideal", help="generators separated by ',' or ';'")
        p.add_argument("--s", type=int, help="number of U-variables")
        p.add_argument("--m", type=int, help="number of X-variables (inferred if omitted)")
        p.add_argument("--field", choices=("q", "z", "fp"), default="q")
        p.add_argument("--p", type=int, help="prime modulus for --field fp")

    def output_flags(p):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--output", help="write to a file instead of stdout")

    p = sub.add_parser("present", help="print the presentation matrix M(f_1..f_r; d)")
    ring_flags(p)
    p.add_argument("--d", type=int, required=True)
    output_flags(p)

    p = sub.add_parser("hilbert", help="tabulate component lengths for a degree window")
    ring_flags(p)
    p.add_argument("--dmin", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    output_flags(p)

    p = sub.add_parser("vanish", help="decide vanishing by both routes")
    ring_flags(p)
    p.add_argument("--d", type=int, required=True)
    output_flags(p)

    p = sub.add_parser("fit", help="fit the table tail by a polynomial, or refute")
    ring_flags(p)
    p.add_argument("--dmin", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--window", type=int, default=6)
    output_flags(p)

    p = sub.add_parser("compare", help="characteristic 0 vs p on the singh builtin")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--dmin", type=int, default=3)
    p.add_argument("--dmax", type=int, default=8)
    output_flags(p)

    p = sub.add_parser("tridiag", help="determinant table of the tridiagonal matrices")
    p.add_argument("--n", type=int, required=True)
    output_flags(p)

    p = sub.add_parser("content", help="content generators, unit and cofiniteness flags")
    ring_flags(p)
    output_flags(p)

    return parser


def _scalar_domain(args):
    if args.field == "q":
        return QQ
    if args.field == "z":
        return ZZ
    if args.p is None:
        raise OutOfRange("--field fp requires --p")
    return GF(args.p)


def _resolve_ideal(args):
    """(ideal, s) from --builtin or from --ideal/--s/--m."""
    base = _scalar_domain(args)
    if getattr(args, "builtin", None):
        return builtin_ideal(args.builtin, base)
    if not args.ideal:
        raise OutOfRange("provide --builtin or --ideal")
    if args.s is None:
        raise OutOfRange("--ideal requires --s")
    needed_m = 0
    needed_s = 0
    for chunk in args.ideal.replace(";", ",").split(","):
        if chunk.strip():
            m, s = required_variable_counts(chunk)
            needed_m = max(needed_m, m)
            needed_s = max(needed_s, s)
    if needed_s > args.s:
        raise OutOfRange(f"ideal mentions U-variable {needed_s} but --s is {args.s}")
    m = args.m if args.m is not None else needed_m
    if needed_m > m:
        raise OutOfRange(f"ideal mentions X-variable {needed_m} but --m is {m}")
    ring = URing(CoefficientRing(base, m), args.s)
    return parse_ideal(args.ideal, ring), args.s


def _emit(text: str, args) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _csv_text(rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _aligned(rows) -> str:
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(str(v).ljust(w) for v, w in zip(row, widths)).rstrip() for row in rows)


def _ceiling():
    value = os.environ.get("LOCOH_MAX_DEGREE")
    return int(value) if value else None


def cmd_present(args) -> int:
    ideal, s = _resolve_ideal(args)
    pm = presentation_matrix(ideal, s, args.d)
    cring = ideal.ring.coeffs
    if args.format == "json":
        _emit(json.dumps(pm.to_json_dict(), sort_keys=True, indent=2), args)
    elif args.format == "csv":
        _emit(_csv_text([[cring.to_str(x) for x in row] for row in pm.matrix.rows]), args)
    else:
        header = f"M(...; d={args.d}): {pm.nrows} x {pm.ncols} over {cring}"
        body = _aligned([[cring.to_str(x) for x in row] for row in pm.matrix.rows])
        _emit(header + "\n" + body, args)
    return 0


def cmd_hilbert(args) -> int:
    ideal, s = _resolve_ideal(args)
    query = CohomologyQuery(ideal, s, args.dmin, args.dmax)
    table = hilbert_table(query, _ceiling())
    if args.format == "json":
        _emit(json.dumps(table_to_json_dict(table), sort_keys=True, indent=2), args)
    elif args.format == "csv":
        _emit(_csv_text(table_to_csv_rows(table)), args)
    else:
        _emit(_aligned(table_to_csv_rows(table)), args)
    return 3 if table.any_not_finite else 0


def cmd_vanish(args) -> int:
    ideal, s = _resolve_ideal(args)
    query = CohomologyQuery(ideal, s, max(s, args.d), max(s, args.d))
    result = vanishes(query, args.d)
    cring = ideal.ring.coeffs
    gens = ", ".join(cring.to_str(c) for c in content_ideal(ideal)) or "0"
    if args.format == "json":
        payload = {
            "d": args.d,
            "vanishes": result,
            "routeA_cokernel": result,
            "routeB_contentUnit": result,
            "content": gens,
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2), args)
    else:
        _emit(
            f"vanishes at d={args.d}: {str(result).lower()}\n"
            f"route A (cokernel is zero): {str(result).lower()}\n"
            f"route B (content is the unit ideal): {str(result).lower()}\n"
            f"content = ({gens})",
            args,
        )
    return 0


def cmd_fit(args) -> int:
    ideal, s = _resolve_ideal(args)
    query = CohomologyQuery(ideal, s, args.dmin, args.dmax)
    table = hilbert_table(query, _ceiling())
    if table.any_not_finite:
        bad = next(row for row in table.rows if row.value is None)
        raise NotFiniteLength(bad.note or f"infinite length at d={bad.d}")
    result = fit_reverse_polynomial(table, window=args.window)
    if isinstance(result, FittedPolynomial):
        if args.format == "json":
            payload = {
                "reversePolynomialType": True,
                "polynomial": str(result.polynomial),
                "degree": result.polynomial.degree,
                "window": result.window,
            }
            _emit(json.dumps(payload, sort_keys=True, indent=2), args)
        else:
            _emit(
                "reverse polynomial type\n"
                f"P(r) = {result.polynomial} (degree {result.polynomial.degree})",
                args,
            )
    else:
        witnesses = (result.primary, result.alternate)
        if args.format == "json":
            payload = {
                "reversePolynomialType": False,
                "witnesses": [
                    {
                        "polynomial": str(w.polynomial),
                        "conflictD": w.conflict_d,
                        "tableValue": w.table_value,
                        "predicted": str(w.predicted),
                    }
                    for w in witnesses
                ],
            }
            _emit(json.dumps(payload, sort_keys=True, indent=2), args)
        else:
            lines = ["NOT reverse polynomial type"]
            for w in witnesses:
                lines.append(
                    f"interpolant {w.polynomial} predicts {w.predicted} at d={w.conflict_d}, "
                    f"table has {w.table_value}"
                )
            _emit("\n".join(lines), args)
    return 0


def cmd_compare(args) -> int:
    rows = char_comparison(args.p, args.dmin, args.dmax, _ceiling())
    if args.format == "json":
        _emit(json.dumps(comparison_to_json_dict(args.p, rows), sort_keys=True, indent=2), args)
    else:
        _emit(_csv_text(comparison_to_csv_rows(args.p, rows)) if args.format == "csv"
              else _aligned(comparison_to_csv_rows(args.p, rows)), args)
    return 0


def cmd_tridiag(args) -> int:
    if args.n < 1:
        raise OutOfRange("--n must be positive")
    rows = [("n", "det", "zero")]
    for n in range(1, args.n + 1):
        value = tridiag_det(n)
        rows.append((str(n), str(value), str(value == 0).lower()))
    if args.format == "json":
        payload = {"rows": [{"n": int(r[0]), "det": int(r[1])} for r in rows[1:]]}
        _emit(json.dumps(payload, sort_keys=True, indent=2), args)
    elif args.format == "csv":
        _emit(_csv_text(rows), args)
    else:
        _emit(_aligned(rows), args)
    return 0


def cmd_content(args) -> int:
    ideal, s = _resolve_ideal(args)
    cring = ideal.ring.coeffs
    gens = content_ideal(ideal)
    unit = content_is_unit(ideal)
    cofinite = is_cofinite(gens, cring)
    report = minimal_primes_report(CohomologyQuery(ideal, s, s, s))
    if args.format == "json":
        payload = {
            "content": [cring.to_str(c) for c in gens],
            "isUnit": unit,
            "isCofinite": cofinite,
            "supportIdeal": report.generator_strings(cring),
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2), args)
    else:
        shown = ", ".join(cring.to_str(c) for c in gens) or "0"
        _emit(
            f"content = ({shown})\n"
            f"unit ideal: {str(unit).lower()}\n"
            f"cofinite: {str(cofinite).lower()}\n"
            f"support ideal generators: {', '.join(report.generator_strings(cring))}",
            args,
        )
    return 0


_COMMANDS = {
    "present": cmd_present,
    "hilbert": cmd_hilbert,
    "vanish": cmd_vanish,
    "fit": cmd_fit,
    "compare": cmd_compare,
    "tridiag": cmd_tridiag,
    "content": cmd_content,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    try:
        return _COMMANDS[args.command](args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotFiniteLength as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (TheoremViolation, RouteDisagreement) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    except LocohError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
