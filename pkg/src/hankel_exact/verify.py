"""Named verification suites.

Each suite enumerates a finite grid of cases, compares two independently
computed exact values per case, and stops at the first mismatch, which is
kept as the counterexample.  `run_suite` and `run_all` are what the
``verify`` command calls.

Suite names are descriptive; the short ``eq*`` tags are accepted as aliases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from . import closed_forms as cf
from . import harmonic_hankel as hh
from .exact_core import Mat, Poly, det_oracle, format_rational, invert_oracle
from .moments import MomentKind, apply_functional, harmonic_number, moment
from .stieltjes import (
    factorize, hankel_det, hankel_matrix, jacobi, kernel_inverse, norm_squared,
    orthogonal_poly, orthogonal_polys, orthopoly_det_oracle, triangle,
)

__all__ = [
    "SuiteResult",
    "TranscriptionFinding",
    "VerificationReport",
    "SUITES",
    "ALIASES",
    "resolve_suite",
    "run_suite",
    "run_all",
    "transcription_findings",
    "FUNCTIONAL_KINDS",
    "HARMONIC_GRID",
    "LISTED_HARMONIC_DETS",
]

FUNCTIONAL_KINDS = (
    MomentKind.hilbert(1),
    MomentKind.hilbert(2),
    MomentKind.generalized(1, Fraction(3, 2)),
)
KIND_GRID = FUNCTIONAL_KINDS + (
    MomentKind.hilbert(Fraction(1, 3)),
    MomentKind.generalized(1, 2),
    MomentKind.generalized(1, Fraction(1, 2)),
    MomentKind.generalized(2, Fraction(7, 3)),
)
HARMONIC_GRID = (
    (Fraction(1), Fraction(1)),
    (Fraction(2), Fraction(1)),
    (Fraction(1), Fraction(2)),
    (Fraction(1, 2), Fraction(3, 2)),
    (Fraction(3), Fraction(7, 3)),
)
S_SAMPLES = (Fraction(2), Fraction(1, 2), Fraction(7, 3))

Case = tuple[str, object, object]


@dataclass
class SuiteResult:
    name: str
    description: str
    passed: bool
    cases: int
    counterexample: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "description": self.description,
            "passed": self.passed,
            "cases": self.cases,
            "counterexample": self.counterexample,
        }


@dataclass
class TranscriptionFinding:
    """A formula whose typeset form was checked against an oracle."""

    formula: str
    printed_holds: bool
    corrected_holds: bool
    printed_counterexample: Optional[str]
    note: str

    def to_dict(self) -> dict:
        return {
            "formula": self.formula,
            "printed_holds": self.printed_holds,
            "corrected_holds": self.corrected_holds,
            "printed_counterexample": self.printed_counterexample,
            "note": self.note,
        }


@dataclass
class VerificationReport:
    suites: list[SuiteResult]
    findings: list[TranscriptionFinding] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "suites": [s.to_dict() for s in self.suites],
            "transcription_findings": [f.to_dict() for f in self.findings if not f.printed_holds],
        }


def _show(v) -> str:
    if isinstance(v, Fraction):
        return format_rational(v)
    return str(v)


def _compare(name: str, description: str, cases: Iterable[Case]) -> SuiteResult:
    count = 0
    for label, got, want in cases:
        count += 1
        if got != want:
            ce = f"{label}: {_show(got)} != {_show(want)}"
            return SuiteResult(name, description, False, count, ce)
    return SuiteResult(name, description, True, count)


def _first_mismatch(cases: Iterable[Case]) -> Optional[str]:
    for label, got, want in cases:
        if got != want:
            return f"{label}: {_show(got)} != {_show(want)}"
    return None


# -- case generators -------------------------------------------------------

def _triangle_sum_cases(nmax: int) -> Iterator[Case]:
    for kind in FUNCTIONAL_KINDS:
        A = triangle(kind, nmax)
        jc = jacobi(kind)
        w = [jc.tprod(k) for k in range(nmax + 1)]
        for n in range(nmax + 1):
            for m in range(nmax + 1):
                lhs = sum((A[n, k] * A[m, k] * w[k] for k in range(min(n, m) + 1)), Fraction(0))
                yield f"{kind} n={n} m={m}", lhs, moment(kind, m + n)


def _monomial_cases(nmax: int) -> Iterator[Case]:
    for kind in FUNCTIONAL_KINDS:
        A = triangle(kind, nmax)
        ps = orthogonal_polys(kind, nmax)
        for n in range(nmax + 1):
            acc = Poly()
            for k in range(n + 1):
                acc = acc + ps[k] * A[n, k]
            yield f"{kind} n={n}", acc, Poly.monomial(n)


def _hankel_det_cases(nmax: int) -> Iterator[Case]:
    for kind in KIND_GRID:
        for n in range(nmax + 1):
            oracle = det_oracle(hankel_matrix(kind, n))
            yield f"{kind} n={n} product", hankel_det(kind, n), oracle
            closed = (cf.hilbert_det_closed(n, kind.t) if kind.s == 1
                      else cf.generalized_det_closed(n, kind.t, kind.s))
            yield f"{kind} n={n} closed", closed, oracle


def _orthogonality_cases(nmax: int) -> Iterator[Case]:
    for t in (Fraction(1), Fraction(2)):
        kind = MomentKind.hilbert(t)
        for n in range(1, nmax + 1):
            yield f"F(P_{n}) t={t}", apply_functional(kind, cf.shifted_legendre(n, t)), Fraction(0)
    for n in range(21):
        yield f"P_{n}(1,1)", cf.shifted_legendre(n, 1)(1), Fraction(1)
    for kind in FUNCTIONAL_KINDS:
        ps = orthogonal_polys(kind, min(nmax, 8))
        for n, p in enumerate(ps):
            for k in range(n):
                yield f"{kind} F(p_{n} x^{k})", apply_functional(kind, p.shift_up(k)), Fraction(0)
            yield f"{kind} F(p_{n}^2)", apply_functional(kind, p * p), norm_squared(kind, n)


def _sum_identity_cases(nmax: int) -> Iterator[Case]:
    for n in range(nmax + 1):
        for i in range(n + 1):
            for j in range(n + 1):
                yield f"n={n} i={i} j={j}", cf.s_identity_lhs(n, i, j), cf.s_identity_rhs(n, i, j)


def _hilbert_inverse_cases(nmax: int) -> Iterator[Case]:
    for n in range(nmax + 1):
        inv = cf.inverse_hilbert_matrix(n)
        yield f"n={n} integral", inv.is_integral(), True
        yield f"n={n} M*inv", hankel_matrix(MomentKind.hilbert(1), n) @ inv, Mat.identity(n + 1)
    for kind in KIND_GRID:
        for n in range(min(nmax, 8) + 1):
            yield f"{kind} n={n} kernel", kernel_inverse(kind, n), invert_oracle(hankel_matrix(kind, n))


def _r_harmonic_cases(nmax: int) -> Iterator[Case]:
    for n in range(nmax + 1):
        yield f"n={n}", hh.r_direct(n, 1, 1), 2 * harmonic_number(n)


def _r_generalized_cases(nmax: int) -> Iterator[Case]:
    for s in S_SAMPLES:
        for n in range(nmax + 1):
            yield f"s={s} n={n}", hh.r_direct(n, 1, s), s * harmonic_number(n) + harmonic_number(n, 1, s)


def _r_recurrence_cases(nmax: int) -> Iterator[Case]:
    for t, s in HARMONIC_GRID:
        rec = hh.r_recurrence(nmax, t, s)
        for n in range(nmax + 1):
            yield f"t={t} s={s} n={n}", rec[n], hh.r_direct(n, t, s)


def _harmonic_det_cases(nmax: int) -> Iterator[Case]:
    for t, s in HARMONIC_GRID:
        for n in range(nmax + 1):
            yield (f"t={t} s={s} n={n}", hh.harmonic_hankel_det(n, t, s),
                   det_oracle(hankel_matrix(MomentKind.harmonic(t, s), n)))
    for n in range(nmax + 1):
        yield f"t=1 closed n={n}", hh.harmonic_det_closed_t1(n), hh.harmonic_hankel_det(n, 1, 1)
        for s in S_SAMPLES:
            yield f"t=1 s={s} closed n={n}", hh.harmonic_det_closed_t1_s(n, s), hh.harmonic_hankel_det(n, 1, s)
    for n in range(2 * nmax + 4):
        yield (f"t=2 closed n={n}", hh.harmonic_det_closed_t2(n),
               det_oracle(hankel_matrix(MomentKind.harmonic(2, 1), n)))


def _reduction_cases(nmax: int) -> Iterator[Case]:
    for t in (Fraction(1), Fraction(2), Fraction(1, 2)):
        jc = jacobi(MomentKind.generalized(t, 1))
        for n in range(nmax + 1):
            yield f"s(n) at s=1 t={t} n={n}", jc.sseq(n), t / 2
            yield (f"t(n) at s=1 t={t} n={n}", jc.tseq(n),
                   Fraction((n + 1) ** 2) * t * t / (4 * (2 * n + 1) * (2 * n + 3)))
            yield f"det at s=1 t={t} n={n}", cf.generalized_det_closed(n, t, 1), cf.hilbert_det_closed(n, t)
        yield (f"recurrence at s=1 t={t}", hh.r_recurrence(3 * nmax, t, 1),
               hh.r_recurrence_s1(3 * nmax, t))
    for n in range(nmax + 1):
        yield (f"inverse at s=1 n={n}", cf.inverse_generalized_matrix(n, 1), cf.inverse_hilbert_matrix(n))
        yield f"harmonic det at s=1 n={n}", hh.harmonic_det_closed_t1_s(n, 1), hh.harmonic_det_closed_t1(n)
        yield (f"orthopoly at s=1 n={n}", cf.generalized_orthopoly_closed(n, 1, 1),
               cf.hilbert_orthopoly_closed(n, 1))
    for kind in FUNCTIONAL_KINDS:
        for n in range(min(nmax, 6) + 1):
            yield f"{kind} bordered p_{n}", orthopoly_det_oracle(kind, n), orthogonal_poly(kind, n)
    for t in (Fraction(1), Fraction(2), Fraction(1, 3)):
        for n in range(1, min(nmax, 6) + 1):
            lhs, rhs = hh.bordered_reduction_sides(n, t)
            yield f"bordered harmonic t={t} n={n}", lhs, rhs


def _closed_triangle_cases(nmax: int) -> Iterator[Case]:
    for t in (Fraction(1), Fraction(2)):
        A = triangle(MomentKind.hilbert(t), nmax)
        for n in range(nmax + 1):
            for k in range(n + 1):
                yield f"hilbert t={t} a({n},{k})", A[n, k], cf.hilbert_triangle_entry(n, k, t)
    for s in S_SAMPLES:
        A = triangle(MomentKind.generalized(1, s), nmax)
        for n in range(nmax + 1):
            for k in range(n + 1):
                yield f"s={s} a({n},{k})", A[n, k], cf.generalized_triangle_entry(n, k, 1, s)
    for kind in KIND_GRID:
        for n in range(min(nmax, 12) + 1):
            yield f"{kind} factorization n={n}", factorize(kind, n).reconstruct(), hankel_matrix(kind, n)


# -- transcription checks ---------------------------------------------------

def _det_grid(fn, nmax: int = 8) -> Iterator[Case]:
    for s in (Fraction(1),) + S_SAMPLES:
        for n in range(nmax + 1):
            yield (f"s={s} n={n}", fn(n, 1, s),
                   det_oracle(hankel_matrix(MomentKind.generalized(1, s), n)))


def _norm_grid(fn, nmax: int = 8) -> Iterator[Case]:
    for s in (Fraction(1),) + S_SAMPLES:
        kind = MomentKind.generalized(1, s)
        for n in range(nmax + 1):
            yield f"s={s} n={n}", fn(n, 1, s), norm_squared(kind, n)


def _rising_grid(fn, nmax: int = 5) -> Iterator[Case]:
    for s in (Fraction(1),) + S_SAMPLES:
        for n in range(nmax + 1):
            inv = invert_oracle(hankel_matrix(MomentKind.generalized(1, s), n))
            for i in range(n + 1):
                for j in range(n + 1):
                    yield f"s={s} n={n} i={i} j={j}", fn(n, i, j, s), inv[i, j]


def _t2_grid(fn, nmax: int = 19) -> Iterator[Case]:
    for n in range(1, nmax + 1, 2):
        yield f"n={n}", fn(n), det_oracle(hankel_matrix(MomentKind.harmonic(2, 1), n))


# Published values of det(H_{i+j})_{i,j=0}^n for n = 0..8.
LISTED_HARMONIC_DETS = (
    Fraction(0),
    Fraction(-1),
    Fraction(1, 24),
    Fraction(-11, 129600),
    Fraction(1, 101606400),
    Fraction(-137, 201637900800000),
    Fraction(1, 35133387835392000000),
    Fraction(-1, 136857980626360093900800000),
    Fraction(1, 658299967151148396655182662860800000000),
)


def _listed_harmonic_grid(fn) -> Iterator[Case]:
    for n, v in enumerate(LISTED_HARMONIC_DETS):
        yield f"n={n}", fn(n, v), det_oracle(hankel_matrix(MomentKind.harmonic(1, 1), n))


def transcription_findings() -> list[TranscriptionFinding]:
    """Typeset formulas checked against elimination.

    ``printed_holds`` is False where only the corrected variant validates.
    """
    out = []
    specs = [
        ("generalized Hilbert determinant product (squared binomial)",
         _det_grid, cf.generalized_det_printed, cf.generalized_det_closed,
         "typeset product leaves the binomial unsquared; the square is forced by s=1 and by elimination"),
        ("generalized norm F(p_n^2) (squared binomial)",
         _norm_grid, cf.generalized_norm_printed, cf.generalized_norm_closed,
         "typeset closed form leaves the binomial unsquared; t(0)...t(n-1) requires the square"),
        ("generalized inverse, rising-factorial form ((n!)^2 divisor)",
         _rising_grid, cf.inverse_generalized_rising_printed, cf.inverse_generalized_rising,
         "typeset divisor n! must be (n!)^2; agrees only for n <= 1 as printed"),
        ("harmonic Hankel determinant at t=2, odd order",
         _t2_grid, hh.harmonic_det_t2_product, hh.harmonic_det_t2_product,
         "validated as printed"),
    ]
    for title, grid, printed, corrected, note in specs:
        bad = _first_mismatch(grid(printed))
        good = _first_mismatch(grid(corrected)) is None
        out.append(TranscriptionFinding(title, bad is None, good, bad, note))
    bad = _first_mismatch(_listed_harmonic_grid(lambda n, v: v))
    good = _first_mismatch(_listed_harmonic_grid(lambda n, v: hh.harmonic_det_closed_t1(n))) is None
    out.append(TranscriptionFinding(
        "listed harmonic Hankel determinants, t=1, n=0..8", bad is None, good, bad,
        "listed values at n=5 and n=7 are off by a factor 10 and n=8 lacks the numerator 761; "
        "the closed form with 2H_n matches elimination"))
    return out


def _transcription_cases(_nmax: int) -> Iterator[Case]:
    for f in transcription_findings():
        yield f.formula, f.corrected_holds, True


# -- registry -----------------------------------------------------------------

@dataclass(frozen=True)
class _Suite:
    description: str
    cases: Callable[[int], Iterator[Case]]
    default_n: int


SUITES: dict[str, _Suite] = {
    "triangle-sum": _Suite("sum_k a(n,k) a(m,k) t(0)..t(k-1) = a(n+m)", _triangle_sum_cases, 10),
    "monomial-expansion": _Suite("sum_k a(n,k) p_k(x) = x^n", _monomial_cases, 10),
    "hankel-det": _Suite("product formula and closed forms match elimination", _hankel_det_cases, 10),
    "closed-triangle": _Suite("closed-form a(n,k) and A D A^T reconstruction", _closed_triangle_cases, 12),
    "orthogonality": _Suite("F(P_n) = 0, P_n(1,1) = 1, F(p_n x^k) = 0, norms", _orthogonality_cases, 12),
    "sum-identity": _Suite("binomial sum identity behind the integer Hilbert inverse", _sum_identity_cases, 5),
    "hilbert-inverse": _Suite("integer Hilbert inverse and kernel-polynomial inverse", _hilbert_inverse_cases, 10),
    "r-harmonic": _Suite("r(n,1) = 2 H_n", _r_harmonic_cases, 40),
    "r-generalized": _Suite("r(n,1,s) = s H_n + H_n(1,s)", _r_generalized_cases, 20),
    "r-recurrence": _Suite("direct sum for r(n,t,s) matches the recurrence", _r_recurrence_cases, 25),
    "harmonic-det": _Suite("harmonic Hankel determinants: reduction and closed forms vs elimination",
                           _harmonic_det_cases, 8),
    "reductions": _Suite("s = 1 specialisations and bordered-determinant reductions", _reduction_cases, 8),
    "transcription": _Suite("corrected typeset formulas validate against elimination", _transcription_cases, 0),
}

ALIASES = {
    "eq1.6": "hankel-det",
    "eq1.7": "triangle-sum",
    "eq1.8": "closed-triangle",
    "eq1.9": "monomial-expansion",
    "eq2.12": "orthogonality",
    "eq2.13": "hilbert-inverse",
    "eq2.14": "sum-identity",
    "eq3.5": "harmonic-det",
    "eq3.6": "r-recurrence",
    "eq4.1": "r-harmonic",
    "eq5.12": "r-generalized",
}


def resolve_suite(name: str) -> str:
    key = ALIASES.get(name, name)
    if key not in SUITES:
        raise KeyError(name)
    return key


def run_suite(name: str, nmax: Optional[int] = None) -> SuiteResult:
    key = resolve_suite(name)
    suite = SUITES[key]
    n = suite.default_n if nmax is None else nmax
    return _compare(key, suite.description, suite.cases(n))


def run_all(nmax: Optional[int] = None) -> VerificationReport:
    return VerificationReport([run_suite(k, nmax) for k in SUITES], transcription_findings())
