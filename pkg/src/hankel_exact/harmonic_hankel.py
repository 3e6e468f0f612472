"""Hankel determinants of (generalized) harmonic numbers.

The determinant det(H_{i+j}(t, s))_{i,j=0}^n reduces to the single sequence

    r(n, t, s) = sum_j (-t)^{n-j} C(n, j) C(n+j+s-1, n) H_j(t, s)

through

    det = (-t)^n / C(2n+s-1, n) * d(n-1, t, s) * r(n, t, s),

where d is the determinant of the generalized Hilbert matrix.  The direct sum
is the reference definition of r; the three-term recurrence is an
accelerator checked against it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .closed_forms import generalized_det_closed
from .exact_core import (
    Mat, RationalLike, as_rational, binomial_general,
    det_oracle, format_rational, invert_oracle,
)
from .moments import MomentKind, harmonic_number
from .stieltjes import hankel_matrix

__all__ = [
    "RValue",
    "ConjectureReport",
    "r_direct",
    "r_value",
    "r_recurrence",
    "r_recurrence_s1",
    "harmonic_hankel_det",
    "harmonic_det_closed_t1",
    "harmonic_det_closed_t1_s",
    "harmonic_det_closed_t2",
    "harmonic_det_t2_product",
    "r_t2_closed",
    "bordered_reduction_sides",
    "bordered_reduction_check",
    "conjecture_report",
    "conjecture_scan",
]

ROUTES = ("direct-sum", "recurrence")


@dataclass(frozen=True)
class RValue:
    n: int
    t: Fraction
    s: Fraction
    value: Fraction
    route: str

    def __post_init__(self):
        if self.route not in ROUTES:
            raise ValueError(f"route must be one of {ROUTES}")


@dataclass(frozen=True)
class ConjectureReport:
    """Integrality of U_n * inverse(H_{i+j})_{i,j=0}^n, with 2H_n = U_n/V_n."""

    n: int
    U_n: int
    holds: bool
    witness: Optional[tuple[int, int, Fraction]] = None

    def to_dict(self) -> dict:
        w = None
        if self.witness is not None:
            i, j, e = self.witness
            w = {"i": i, "j": j, "entry": format_rational(e)}
        return {"n": self.n, "U_n": str(self.U_n), "holds": self.holds, "witness": w}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "ConjectureReport":
        w = d.get("witness")
        witness = None if w is None else (int(w["i"]), int(w["j"]), as_rational(w["entry"]))
        return cls(int(d["n"]), int(d["U_n"]), bool(d["holds"]), witness)


def _ts(t: RationalLike, s: RationalLike) -> tuple[Fraction, Fraction]:
    t, s = as_rational(t), as_rational(s)
    if s == 0 or (s.denominator == 1 and s < 0):
        raise ValueError(f"s must avoid 0 and the negative integers, got {s}")
    return t, s


def r_direct(n: int, t: RationalLike = 1, s: RationalLike = 1) -> Fraction:
    t, s = _ts(t, s)
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum(((-t) ** (n - j) * comb(n, j) * binomial_general(n + j + s - 1, n)
                * harmonic_number(j, t, s) for j in range(1, n + 1)), Fraction(0))


def r_value(n: int, t: RationalLike = 1, s: RationalLike = 1, route: str = "direct-sum") -> RValue:
    t, s = _ts(t, s)
    if route == "direct-sum":
        v = r_direct(n, t, s)
    else:
        v = r_recurrence(n, t, s)[n]
    return RValue(n, t, s, v, route)


def r_recurrence(nmax: int, t: RationalLike = 1, s: RationalLike = 1) -> list[Fraction]:
    """r(0..nmax) seeded with r(0) = 0 and the direct r(1), advanced by

        (n+2)(n+1+s)(2n+1+s) r(n+2)
          = (2n+2+s) Q(n) r(n+1) - (n+1)(n+s)(2n+3+s) t^2 r(n),
        Q(n) = (2n+1)(2n+3) + 4s(n+1) + s^2 - 2(n+1)^2 t - s t (2n+1+s).
    """
    t, s = _ts(t, s)
    out = [Fraction(0), r_direct(1, t, s)]
    for n in range(nmax - 1):
        q = ((2 * n + 1) * (2 * n + 3) + 4 * s * (n + 1) + s * s
             - 2 * (n + 1) ** 2 * t - s * t * (2 * n + 1 + s))
        nxt = ((2 * n + 2 + s) * q * out[n + 1] - (n + 1) * (n + s) * (2 * n + 3 + s) * t * t * out[n])
        out.append(nxt / ((n + 2) * (n + 1 + s) * (2 * n + 1 + s)))
    return out[: nmax + 1]


def r_recurrence_s1(nmax: int, t: RationalLike = 1) -> list[Fraction]:
    """s = 1 recurrence: n r(n) + (t-2)(2n-1) r(n-1) + t^2 (n-1) r(n-2) = 0."""
    t = as_rational(t)
    out = [Fraction(0), 2 * t]
    for n in range(2, nmax + 1):
        out.append(-((t - 2) * (2 * n - 1) * out[n - 1] + t * t * (n - 1) * out[n - 2]) / n)
    return out[: nmax + 1]


def harmonic_hankel_det(n: int, t: RationalLike = 1, s: RationalLike = 1) -> Fraction:
    """det(H_{i+j}(t, s))_{i,j=0}^n via the reduction to r(n, t, s); 0 for n = 0."""
    t, s = _ts(t, s)
    if n == 0:
        return Fraction(0)
    return ((-t) ** n / binomial_general(2 * n + s - 1, n)
            * generalized_det_closed(n - 1, t, s) * r_direct(n, t, s))


def harmonic_det_closed_t1(n: int) -> Fraction:
    """(-1)^n 2H_n / (C(2n,n) prod_{j<n} (2j+1) C(2j,j)^2)."""
    den = comb(2 * n, n)
    for j in range(1, n):
        den *= (2 * j + 1) * comb(2 * j, j) ** 2
    return (-1) ** n * 2 * harmonic_number(n) / den


def harmonic_det_closed_t1_s(n: int, s: RationalLike) -> Fraction:
    """(-1)^n s^{n-1} (s H_n + H_n(1, s)) / (C(2n+s-1, n) prod_{j<n} (2j+s) C(2j+s-1, j)^2)."""
    _, s = _ts(1, s)
    if n == 0:
        return Fraction(0)
    den = binomial_general(2 * n + s - 1, n)
    for j in range(1, n):
        den *= (2 * j + s) * binomial_general(2 * j + s - 1, j) ** 2
    return (-1) ** n * s ** (n - 1) * (s * harmonic_number(n) + harmonic_number(n, 1, s)) / den


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def r_t2_closed(n: int) -> Fraction:
    """r(n, 2): zero for even n, (-1)^m m! 2^{3m+2} / (2m+1)!! for n = 2m+1."""
    if n % 2 == 0:
        return Fraction(0)
    m = n // 2
    return Fraction((-1) ** m * factorial(m) * 2 ** (3 * m + 2), _double_factorial(2 * m + 1))


def harmonic_det_t2_product(n: int) -> Fraction:
    """Closed form of det(H_{i+j}(2)) at odd order n = 2m+1:

        (-1)^{m+1} 2^{4m^2+7m+3} m! / ((2m+1)! (2m+1)!! prod_{j=1}^{2m+1} C(2j,j) C(2j-1,j))
    """
    if n % 2 == 0:
        raise ValueError("odd order only")
    m = n // 2
    den = factorial(2 * m + 1) * _double_factorial(2 * m + 1)
    for j in range(1, 2 * m + 2):
        den *= comb(2 * j, j) * comb(2 * j - 1, j)
    return Fraction((-1) ** (m + 1) * 2 ** (4 * m * m + 7 * m + 3) * factorial(m), den)


def harmonic_det_closed_t2(n: int) -> Fraction:
    """det(H_{i+j}(2))_{i,j=0}^n: zero at even order, closed product at odd order.

    The odd-order product is cross-checked against the reduction with the
    closed form of r(n, 2); a mismatch raises ``ArithmeticError``.
    """
    if n % 2 == 0:
        return Fraction(0)
    v = harmonic_det_t2_product(n)
    via_r = Fraction(-2) ** n / comb(2 * n, n) * generalized_det_closed(n - 1, 2, 1) * r_t2_closed(n)
    if v != via_r:
        raise ArithmeticError(f"t=2 closed form disagrees with the r-reduction at n={n}")
    return v


def bordered_reduction_sides(n: int, t: RationalLike = 1) -> tuple[Fraction, Fraction]:
    """det(H_{i+j}(t)) and (-t)^n det(bordered Hilbert matrix), both by elimination.

    The bordered matrix has columns t^{i+j}/(i+j+1) for j < n and the last
    column (0, H_1(t), ..., H_n(t)).
    """
    t = as_rational(t)
    if n < 1:
        raise ValueError("n must be at least 1")
    lhs = det_oracle(hankel_matrix(MomentKind.harmonic(t, 1), n))
    rows = [[t ** (i + j) / (i + j + 1) for j in range(n)] + [harmonic_number(i, t)]
            for i in range(n + 1)]
    rhs = (-t) ** n * det_oracle(Mat.from_rows(rows))
    return lhs, rhs


def bordered_reduction_check(n: int, t: RationalLike = 1) -> bool:
    lhs, rhs = bordered_reduction_sides(n, t)
    return lhs == rhs


def conjecture_report(n: int) -> ConjectureReport:
    if n < 1:
        raise ValueError("n must be at least 1 (the order-0 matrix [H_0] = [0] is singular)")
    inv = invert_oracle(hankel_matrix(MomentKind.harmonic(1, 1), n))
    u = (2 * harmonic_number(n)).numerator
    for i in range(n + 1):
        for j in range(n + 1):
            e = u * inv[i, j]
            if e.denominator != 1:
                return ConjectureReport(n, u, False, (i, j, e))
    return ConjectureReport(n, u, True)


def conjecture_scan(nmax: int) -> list[ConjectureReport]:
    """Scan n = 1..nmax.  A singular matrix propagates as SingularMatrixError."""
    if nmax < 1:
        raise ValueError("nmax must be at least 1")
    return [conjecture_report(n) for n in range(1, nmax + 1)]
