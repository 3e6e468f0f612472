"""Closed-form values for Hilbert-type Hankel matrices.

Every function here is an explicit product or finite sum; the matching
recurrence-based or elimination-based routes live in `stieltjes` and
`exact_core`.  A few functions carry a ``_printed`` twin that evaluates a
formula exactly as it was originally typeset, so that the verification
suite can show those variants fail while the corrected ones hold.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .exact_core import Mat, Poly, RationalLike, as_rational, binomial_general, rising_factorial

__all__ = [
    "hilbert_det_closed",
    "generalized_det_closed",
    "generalized_det_printed",
    "generalized_norm_closed",
    "generalized_norm_printed",
    "hilbert_triangle_entry",
    "generalized_triangle_entry",
    "shifted_legendre",
    "shifted_legendre_recurrence",
    "hilbert_orthopoly_closed",
    "generalized_orthopoly_closed",
    "inverse_hilbert_entry",
    "inverse_hilbert_matrix",
    "inverse_generalized_entry",
    "inverse_generalized_rising",
    "inverse_generalized_rising_printed",
    "inverse_generalized_matrix",
    "s_identity_lhs",
    "s_identity_rhs",
    "s_identity_sides",
]


def _check_index(n: int, i: int, j: int) -> None:
    if not (0 <= i <= n and 0 <= j <= n):
        raise IndexError(f"indices ({i}, {j}) outside 0..{n}")


def hilbert_det_closed(n: int, t: RationalLike = 1) -> Fraction:
    """det(t^{i+j}/(i+j+1))_{i,j=0}^n = t^{n^2+n} / prod_j (2j+1) C(2j,j)^2."""
    t = as_rational(t)
    den = 1
    for j in range(1, n + 1):
        den *= (2 * j + 1) * comb(2 * j, j) ** 2
    return t ** (n * n + n) / den


def generalized_det_closed(n: int, t: RationalLike, s: RationalLike) -> Fraction:
    """det(s t^{i+j}/(i+j+s))_{i,j=0}^n with the binomial squared."""
    t, s = as_rational(t), as_rational(s)
    den = Fraction(1)
    for j in range(1, n + 1):
        den *= (2 * j + s) * binomial_general(2 * j + s - 1, j) ** 2
    return s**n * t ** (n * n + n) / den


def generalized_det_printed(n: int, t: RationalLike, s: RationalLike) -> Fraction:
    """Same product with the binomial unsquared, as originally typeset.

    Wrong already at s = 1, n = 1 (gives 1/6 instead of 1/12).
    """
    t, s = as_rational(t), as_rational(s)
    den = Fraction(1)
    for j in range(1, n + 1):
        den *= (2 * j + s) * binomial_general(2 * j + s - 1, j)
    return s**n * t ** (n * n + n) / den


def generalized_norm_closed(n: int, t: RationalLike, s: RationalLike) -> Fraction:
    """F(p_n^2) = s t^{2n} / ((2n+s) C(2n+s-1, n)^2)."""
    t, s = as_rational(t), as_rational(s)
    return s * t ** (2 * n) / ((2 * n + s) * binomial_general(2 * n + s - 1, n) ** 2)


def generalized_norm_printed(n: int, t: RationalLike, s: RationalLike) -> Fraction:
    """The unsquared variant, as originally typeset."""
    t, s = as_rational(t), as_rational(s)
    return s * t ** (2 * n) / ((2 * n + s) * binomial_general(2 * n + s - 1, n))


def hilbert_triangle_entry(n: int, k: int, t: RationalLike = 1) -> Fraction:
    """a(n, k) = C(n,k) (2k+1)!/k! * n!/(n+k+1)! * t^{n-k}."""
    if k > n:
        return Fraction(0)
    t = as_rational(t)
    return (comb(n, k) * Fraction(factorial(2 * k + 1), factorial(k))
            * Fraction(factorial(n), factorial(n + k + 1)) * t ** (n - k))


def generalized_triangle_entry(n: int, k: int, t: RationalLike, s: RationalLike) -> Fraction:
    """a(n, k) = C(n,k) prod_{j=0}^k (s+k+j)/(s+n+j) * t^{n-k}."""
    if k > n:
        return Fraction(0)
    t, s = as_rational(t), as_rational(s)
    p = Fraction(1)
    for j in range(k + 1):
        p *= (s + k + j) / (s + n + j)
    return comb(n, k) * p * t ** (n - k)


def shifted_legendre(n: int, t: RationalLike = 1) -> Poly:
    """P_n(x, t) = sum_j (-t)^{n-j} C(n,j) C(n+j,j) x^j."""
    t = as_rational(t)
    return Poly((-t) ** (n - j) * comb(n, j) * comb(n + j, j) for j in range(n + 1))


def shifted_legendre_recurrence(nmax: int, t: RationalLike = 1) -> list[Poly]:
    """P_0..P_nmax from (n+2)P_{n+2} = (2x-t)(2n+3)P_{n+1} - t^2(n+1)P_n."""
    t = as_rational(t)
    out = [Poly([1]), Poly([-t, 2])]
    lin = Poly([-t, 2])
    for n in range(nmax - 1):
        out.append((lin * out[n + 1] * (2 * n + 3) - out[n] * (t * t * (n + 1))) / (n + 2))
    return out[: nmax + 1]


def hilbert_orthopoly_closed(n: int, t: RationalLike = 1) -> Poly:
    """Monic p_n(x, t) = P_n(x, t) / C(2n, n)."""
    return shifted_legendre(n, t) / comb(2 * n, n)


def generalized_orthopoly_closed(n: int, t: RationalLike, s: RationalLike) -> Poly:
    """Monic p_n(x) = sum_j (-t)^{n-j} C(n,j) C(n+j+s-1, n) x^j / C(2n+s-1, n)."""
    t, s = as_rational(t), as_rational(s)
    lead = binomial_general(2 * n + s - 1, n)
    return Poly((-t) ** (n - j) * comb(n, j) * binomial_general(n + j + s - 1, n) / lead
                for j in range(n + 1))


def inverse_hilbert_entry(n: int, i: int, j: int) -> Fraction:
    _check_index(n, i, j)
    v = ((i + j + 1) * comb(n + i + 1, n - j) * comb(n + j + 1, n - i) * comb(i + j, i) ** 2)
    return Fraction(-v if (i + j) % 2 else v)


def inverse_hilbert_matrix(n: int) -> Mat:
    """Integer inverse of the (n+1)x(n+1) Hilbert matrix."""
    return Mat.from_function(n + 1, n + 1, lambda i, j: inverse_hilbert_entry(n, i, j))


def inverse_generalized_entry(n: int, i: int, j: int, s: RationalLike) -> Fraction:
    """Entry (i, j) of the inverse of (s/(i+j+s))_{i,j=0}^n.

    Evaluated in binomial form and cross-checked against the rising-factorial
    form; a disagreement raises ``ArithmeticError``.
    """
    _check_index(n, i, j)
    s = as_rational(s)
    sign = -1 if (i + j) % 2 else 1
    v = (sign * (i + j + s) / s
         * binomial_general(n + i + s, n - j) * binomial_general(n + j + s, n - i)
         * binomial_general(i + j + s - 1, i) * binomial_general(i + j + s - 1, j))
    w = inverse_generalized_rising(n, i, j, s)
    if v != w:
        raise ArithmeticError(f"inverse entry forms disagree at n={n}, i={i}, j={j}, s={s}: {v} != {w}")
    return v


def inverse_generalized_rising(n: int, i: int, j: int, s: RationalLike) -> Fraction:
    """(-1)^{i+j}/(s(s+i+j)) * C(n,i) C(n,j) (s+i)^{(n+1)} (s+j)^{(n+1)} / (n!)^2."""
    _check_index(n, i, j)
    s = as_rational(s)
    sign = -1 if (i + j) % 2 else 1
    return (Fraction(sign) / (s * (s + i + j)) * comb(n, i) * comb(n, j)
            * rising_factorial(s + i, n + 1) * rising_factorial(s + j, n + 1)
            / factorial(n) ** 2)


def inverse_generalized_rising_printed(n: int, i: int, j: int, s: RationalLike) -> Fraction:
    """The rising-factorial form with a single 1/n!, as originally typeset.

    Agrees with the true inverse only for n <= 1.
    """
    return inverse_generalized_rising(n, i, j, s) * factorial(n)


def inverse_generalized_matrix(n: int, s: RationalLike) -> Mat:
    return Mat.from_function(n + 1, n + 1, lambda i, j: inverse_generalized_entry(n, i, j, s))


def s_identity_lhs(n: int, i: int, j: int) -> int:
    """sum_{k=max(i,j)}^n C(k,i) C(k,j) C(k+i,i) C(k+j,j) (2k+1)."""
    _check_index(n, i, j)
    return sum(comb(k, i) * comb(k, j) * comb(k + i, i) * comb(k + j, j) * (2 * k + 1)
               for k in range(max(i, j), n + 1))


def s_identity_rhs(n: int, i: int, j: int) -> int:
    """S(n, i, j) = (i+j+1) C(n+i+1, n-j) C(n+j+1, n-i) C(i+j, i)^2."""
    _check_index(n, i, j)
    return (i + j + 1) * comb(n + i + 1, n - j) * comb(n + j + 1, n - i) * comb(i + j, i) ** 2


def s_identity_sides(n: int, i: int, j: int) -> tuple[Fraction, Fraction]:
    return Fraction(s_identity_lhs(n, i, j)), Fraction(s_identity_rhs(n, i, j))
