"""Command-line interface.

    hankel-exact det --family harmonic --t 1 --s 1 --n 0..8 --all
    hankel-exact inverse --family hilbert --n 3 --closed
    hankel-exact verify --all
    hankel-exact rseq --t 2 --s 1 --nmax 10
    hankel-exact orthopoly --family hilbert --t 1 --n 4
    hankel-exact conjecture --nmax 12

Rationals go in and out as exact ``p/q`` strings.  Exit codes: 0 success,
1 failed check (or singular matrix), 2 usage error, 3 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Sequence

from . import closed_forms as cf
from . import harmonic_hankel as hh
from .exact_core import (
    SingularMatrixError, as_rational, binomial_general, det_oracle, format_rational, invert_oracle,
)
from .moments import Family, MomentKind
from .stieltjes import hankel_det, hankel_matrix, kernel_inverse, orthogonal_poly
from .verify import ALIASES, SUITES, VerificationReport, run_suite, transcription_findings

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- argument types --------------------------------------------------------

def rational_arg(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def range_arg(text: str) -> range:
    """``a..b`` inclusive, or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return range(lo, hi + 1)


def nat_arg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def approx(q: Fraction, digits: int = 15) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return format(Decimal(q.numerator) / Decimal(q.denominator), "g")


def make_kind(args) -> MomentKind:
    try:
        fam = Family(args.family)
        s = Fraction(1) if fam is Family.HILBERT else args.s
        if fam is Family.HILBERT and args.s != 1:
            raise UsageError("--s does not apply to the hilbert family")
        return MomentKind(fam, args.t, s)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- output ----------------------------------------------------------------

def _cell(v) -> str:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    return str(v)


def emit_table(rows: list[dict], columns: Sequence[str], fmt: str, meta: Optional[dict] = None,
               out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        payload = dict(meta or {})
        payload["rows"] = [{c: (_cell(r[c]) if isinstance(r[c], Fraction) else r[c]) for c in columns}
                           for r in rows]
        json.dump(payload, out, indent=2)
        out.write("\n")
        return
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_cell(r[c]) for c in columns])
        return
    cells = [[_cell(r[c]) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[k]) for row in cells]) for k, c in enumerate(columns)]
    out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for row in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def emit_matrix(m, fmt: str, meta: dict, out=None) -> None:
    out = out or sys.stdout
    body = [[format_rational(a) for a in row] for row in m.tolist()]
    if fmt == "json":
        payload = dict(meta)
        payload["matrix"] = body
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        csv.writer(out, lineterminator="\n").writerows(body)
    else:
        width = max((len(a) for row in body for a in row), default=1)
        for row in body:
            out.write("[" + "  ".join(a.rjust(width) for a in row) + "]\n")


def _add_decimal(rows: list[dict], columns: list[str], value_cols: Sequence[str]) -> list[str]:
    extra = []
    for c in value_cols:
        name = f"{c}_approx"
        extra.append(name)
        for r in rows:
            v = r.get(c)
            r[name] = approx(v) if isinstance(v, Fraction) else ""
    return columns + extra


# -- determinant routes ----------------------------------------------------

def det_closed(kind: MomentKind, n: int) -> Fraction:
    if kind.family is Family.HILBERT:
        return cf.hilbert_det_closed(n, kind.t)
    if kind.family is Family.GENERALIZED:
        return cf.generalized_det_closed(n, kind.t, kind.s)
    if kind.t == 1:
        return hh.harmonic_det_closed_t1(n) if kind.s == 1 else hh.harmonic_det_closed_t1_s(n, kind.s)
    if kind.t == 2 and kind.s == 1:
        return hh.harmonic_det_closed_t2(n)
    return hh.harmonic_hankel_det(n, kind.t, kind.s)


def det_factor(kind: MomentKind, n: int) -> Fraction:
    if kind.has_functional:
        return hankel_det(kind, n)
    if n == 0:
        return Fraction(0)
    t, s = kind.t, kind.s
    d = hankel_det(MomentKind.generalized(t, s), n - 1)
    r = hh.r_recurrence(n, t, s)[n]
    return (-t) ** n / binomial_general(2 * n + s - 1, n) * d * r


def det_oracle_route(kind: MomentKind, n: int) -> Fraction:
    return det_oracle(hankel_matrix(kind, n))


DET_ROUTES = {"closed": det_closed, "factor": det_factor, "oracle": det_oracle_route}


def cmd_det(args) -> int:
    kind = make_kind(args)
    routes = [r for r in DET_ROUTES if getattr(args, r)] if not args.all else list(DET_ROUTES)
    if not routes:
        routes = ["closed"]
    rows = []
    for n in args.n:
        row = {"n": n}
        for r in routes:
            row[r] = DET_ROUTES[r](kind, n)
        if args.all:
            row["agree"] = len({row[r] for r in routes}) == 1
        rows.append(row)
    columns = ["n"] + routes + (["agree"] if args.all else [])
    if args.decimal:
        columns = _add_decimal(rows, columns, routes)
    emit_table(rows, columns, args.format, {"kind": kind.to_dict()})
    bad = [r for r in rows if r.get("agree") is False]
    if bad:
        for r in bad:
            vals = ", ".join(f"{k}={format_rational(r[k])}" for k in routes)
            print(f"discrepancy at n={r['n']}: {vals}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_inverse(args) -> int:
    kind = make_kind(args)
    chosen = [r for r in ("closed", "kernel", "oracle") if getattr(args, r)]
    if len(chosen) > 1:
        raise UsageError("choose one of --closed, --kernel, --oracle")
    route = chosen[0] if chosen else "oracle"
    n = args.n
    if route == "closed":
        if kind.family is Family.HARMONIC or kind.t != 1:
            raise UsageError("--closed is available for hilbert/generalized with t = 1")
        m = (cf.inverse_hilbert_matrix(n) if kind.family is Family.HILBERT
             else cf.inverse_generalized_matrix(n, kind.s))
    elif route == "kernel":
        if kind.family is Family.HARMONIC:
            raise UsageError("--kernel needs a hilbert or generalized family")
        m = kernel_inverse(kind, n)
    else:
        try:
            m = invert_oracle(hankel_matrix(kind, n))
        except SingularMatrixError as exc:
            err = {"error": "singular", "pivot": exc.pivot, "kind": kind.to_dict(), "n": n}
            if args.format == "json":
                print(json.dumps(err))
            else:
                print(f"error: singular matrix (pivot column {exc.pivot})", file=sys.stderr)
            return EXIT_FAIL
    emit_matrix(m, args.format, {"kind": kind.to_dict(), "n": n, "route": route})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.all:
        names = list(SUITES)
    elif args.suite:
        names = args.suite
    else:
        raise UsageError("give --suite NAME or --all")
    results = []
    for name in names:
        try:
            results.append(run_suite(name, args.nmax))
        except KeyError:
            known = ", ".join(list(SUITES) + list(ALIASES))
            raise UsageError(f"unknown suite {name!r}; known: {known}") from None
    report = VerificationReport(results, transcription_findings() if args.all or "transcription" in names else [])
    if args.format == "json":
        json.dump(report.to_dict(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    elif args.format == "csv":
        rows = [r.to_dict() for r in results]
        emit_table(rows, ["suite", "passed", "cases", "counterexample"], "csv")
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status}  {r.name:<20} {r.cases:>6} cases  {r.description}")
            if r.counterexample:
                print(f"      counterexample: {r.counterexample}")
        flagged = [f for f in report.findings if not f.printed_holds]
        if flagged:
            print("\ntranscription findings (corrected form validated, typeset form did not):")
            for f in flagged:
                print(f"  - {f.formula}: {f.note}")
                print(f"    typeset form fails at {f.printed_counterexample}")
        print(f"\n{'all passed' if report.passed else 'FAILURES'}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_rseq(args) -> int:
    try:
        rec = hh.r_recurrence(args.nmax, args.t, args.s)
        rows = []
        for n in range(args.nmax + 1):
            d = hh.r_direct(n, args.t, args.s)
            rows.append({"n": n, "r_direct": d, "r_recurrence": rec[n], "agree": d == rec[n]})
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    columns = ["n", "r_direct", "r_recurrence", "agree"]
    if args.decimal:
        columns = _add_decimal(rows, columns, ["r_direct"])
    meta = {"t": format_rational(args.t), "s": format_rational(args.s)}
    emit_table(rows, columns, args.format, meta)
    return EXIT_OK if all(r["agree"] for r in rows) else EXIT_FAIL


def cmd_orthopoly(args) -> int:
    kind = make_kind(args)
    if not kind.has_functional:
        raise UsageError("harmonic moments do not define orthogonal polynomials")
    if args.shifted:
        if kind.family is not Family.HILBERT:
            raise UsageError("--shifted applies to the hilbert family")
        p = cf.shifted_legendre(args.n, kind.t)
    else:
        p = orthogonal_poly(kind, args.n)
    coeffs = [format_rational(c) for c in p.coeffs]
    if args.format == "json":
        print(json.dumps({"kind": kind.to_dict(), "n": args.n, "shifted": args.shifted,
                          "coeffs": coeffs}))
    elif args.format == "csv":
        emit_table([{"degree": k, "coeff": c} for k, c in enumerate(p.coeffs)], ["degree", "coeff"], "csv")
    else:
        print("[" + ", ".join(coeffs) + "]")
    return EXIT_OK


def cmd_conjecture(args) -> int:
    if args.nmax < 1:
        raise UsageError("--nmax must be at least 1")
    try:
        reports = hh.conjecture_scan(args.nmax)
    except SingularMatrixError as exc:
        print(f"error: singular harmonic Hankel matrix (pivot column {exc.pivot})", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "json":
        json.dump([r.to_dict() for r in reports], sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        rows = []
        for r in reports:
            d = r.to_dict()
            w = d["witness"]
            d["witness"] = "" if w is None else f"({w['i']},{w['j']}) {w['entry']}"
            rows.append(d)
        emit_table(rows, ["n", "U_n", "holds", "witness"], args.format)
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAIL


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hankel-exact", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, family=True):
        if family:
            sp.add_argument("--family", choices=[f.value for f in Family], default="hilbert")
        sp.add_argument("--t", type=rational_arg, default=Fraction(1))
        sp.add_argument("--s", type=rational_arg, default=Fraction(1))
        sp.add_argument("--format", choices=["text", "json", "csv"], default="text")

    d = sub.add_parser("det", help="Hankel determinants by closed form, factorization or elimination")
    common(d)
    d.add_argument("--n", type=range_arg, required=True, help="order N or inclusive range A..B")
    d.add_argument("--closed", action="store_true")
    d.add_argument("--factor", action="store_true")
    d.add_argument("--oracle", action="store_true")
    d.add_argument("--all", action="store_true", help="all routes plus an agreement column")
    d.add_argument("--decimal", action="store_true", help="add approximate decimal columns")
    d.set_defaults(func=cmd_det)

    i = sub.add_parser("inverse", help="inverse Hankel matrix")
    common(i)
    i.add_argument("--n", type=nat_arg, required=True)
    i.add_argument("--closed", action="store_true")
    i.add_argument("--kernel", action="store_true")
    i.add_argument("--oracle", action="store_true")
    i.set_defaults(func=cmd_inverse)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", action="append", help="suite name (repeatable)")
    v.add_argument("--all", action="store_true")
    v.add_argument("--nmax", type=nat_arg, default=None, help="override the suite's default size")
    v.add_argument("--format", choices=["text", "json", "csv"], default="text")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("rseq", help="r(n, t, s) by direct sum and by recurrence")
    common(r, family=False)
    r.add_argument("--nmax", type=nat_arg, required=True)
    r.add_argument("--decimal", action="store_true")
    r.set_defaults(func=cmd_rseq)

    o = sub.add_parser("orthopoly", help="monic orthogonal polynomial coefficients, low degree first")
    common(o)
    o.add_argument("--n", type=nat_arg, required=True)
    o.add_argument("--shifted", action="store_true", help="integer-coefficient shifted Legendre P_n")
    o.set_defaults(func=cmd_orthopoly)

    c = sub.add_parser("conjecture", help="integrality scan of U_n times the harmonic Hankel inverse")
    c.add_argument("--nmax", type=nat_arg, required=True)
    c.add_argument("--format", choices=["text", "json", "csv"], default="text")
    c.set_defaults(func=cmd_conjecture)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
