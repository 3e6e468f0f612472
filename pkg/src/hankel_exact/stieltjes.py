"""Orthogonal-polynomial machinery for Hankel matrices of moments.

Given the Jacobi coefficients s(n), t(n) of a moment functional, the
triangle a(n, k) defined by

    a(0, j) = [j = 0]
    a(n, j) = a(n-1, j-1) + s(j) a(n-1, j) + t(j) a(n-1, j+1)

yields the factorization  Hankel = A D A^T  with A = (a(i, j)) unitriangular
and D = diag(prod_{j<k} t(j)).  Everything else here (determinant,
orthogonal polynomials, norms, inverse via the kernel polynomial) follows
from that.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exact_core import Mat, Poly, SingularMatrixError, det_oracle, format_rational
from .moments import MomentKind, moment

__all__ = [
    "JacobiCoeffs",
    "Factorization",
    "jacobi",
    "triangle",
    "hankel_matrix",
    "factorize",
    "hankel_det",
    "orthogonal_poly",
    "orthogonal_polys",
    "orthopoly_det_oracle",
    "norm_squared",
    "kernel_inverse",
]


@dataclass(frozen=True)
class JacobiCoeffs:
    """Three-term recurrence coefficients for a Hilbert or generalized kind.

    p_n = (x - sseq(n-1)) p_{n-1} - tseq(n-2) p_{n-2}
    """

    kind: MomentKind

    def sseq(self, n: int) -> Fraction:
        s, t = self.kind.s, self.kind.t
        if n == 0:
            # general expression is 0/0 here when s = 1; s(s-1) / ((s-1)(s+1)) cancels
            return s * t / (s + 1)
        return (2 * n * n + (2 * n - 1) * s + s * s) * t / ((s + 2 * n - 1) * (s + 2 * n + 1))

    def tseq(self, n: int) -> Fraction:
        s, t = self.kind.s, self.kind.t
        return ((n + 1) ** 2 * (n + s) ** 2 * t * t
                / ((s + 2 * n) * (s + 2 * n + 1) ** 2 * (s + 2 * n + 2)))

    def tprod(self, k: int) -> Fraction:
        """t(0) t(1) ... t(k-1)."""
        out = Fraction(1)
        for j in range(k):
            out *= self.tseq(j)
        return out


def jacobi(kind: MomentKind) -> JacobiCoeffs:
    kind.require_functional()
    return JacobiCoeffs(kind)


def _triangle_rows(kind: MomentKind, nmax: int) -> list[list[Fraction]]:
    jc = jacobi(kind)
    sv = [jc.sseq(j) for j in range(nmax + 1)]
    tv = [jc.tseq(j) for j in range(nmax + 1)]
    rows = [[Fraction(1)] + [Fraction(0)] * nmax]
    for n in range(1, nmax + 1):
        prev = rows[-1]
        cur = []
        for j in range(nmax + 1):
            v = sv[j] * prev[j]
            if j > 0:
                v += prev[j - 1]
            if j < nmax:
                v += tv[j] * prev[j + 1]
            cur.append(v)
        rows.append(cur)
    return rows


def triangle(kind: MomentKind, nmax: int) -> Mat:
    """Lower-triangular matrix (a(n, k))_{0 <= k <= n <= nmax}."""
    return Mat.from_rows(_triangle_rows(kind, nmax))


def hankel_matrix(kind: MomentKind, n: int) -> Mat:
    """(a(i + j))_{i,j=0}^n, for any family."""
    a = [moment(kind, k) for k in range(2 * n + 1)]
    return Mat.from_function(n + 1, n + 1, lambda i, j: a[i + j])


@dataclass(frozen=True)
class Factorization:
    """Hankel = A D A^T for matrix order n (size n+1)."""

    A: Mat
    D: Mat
    n: int

    def reconstruct(self) -> Mat:
        return self.A @ self.D @ self.A.T

    def to_dict(self) -> dict:
        return {
            "A": [[format_rational(a) for a in row] for row in self.A.tolist()],
            "D": [format_rational(d) for d in self.D.diag()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Factorization":
        A = Mat.from_rows(d["A"])
        return cls(A, Mat.diagonal(d["D"]), A.rows - 1)


def factorize(kind: MomentKind, n: int) -> Factorization:
    A = triangle(kind, n)
    jc = jacobi(kind)
    D = Mat.diagonal([jc.tprod(k) for k in range(n + 1)])
    return Factorization(A, D, n)


def hankel_det(kind: MomentKind, n: int) -> Fraction:
    """prod_{i=1}^n prod_{j<i} t(j), i.e. the product of the D diagonal."""
    jc = jacobi(kind)
    out = Fraction(1)
    partial = Fraction(1)
    for i in range(1, n + 1):
        partial *= jc.tseq(i - 1)
        out *= partial
    return out


def orthogonal_polys(kind: MomentKind, n: int) -> list[Poly]:
    """[p_0, ..., p_n] from the three-term recurrence."""
    jc = jacobi(kind)
    x = Poly([0, 1])
    ps = [Poly([1])]
    if n >= 1:
        ps.append(x - jc.sseq(0))
    for k in range(2, n + 1):
        ps.append((x - jc.sseq(k - 1)) * ps[-1] - ps[-2] * jc.tseq(k - 2))
    return ps


def orthogonal_poly(kind: MomentKind, n: int) -> Poly:
    return orthogonal_polys(kind, n)[n]


def orthopoly_det_oracle(kind: MomentKind, n: int) -> Poly:
    """p_n from the bordered Hankel determinant, expanded along the last column.

    Does not touch the Jacobi coefficients; every minor is a `det_oracle` call.
    """
    kind.require_functional()
    if n == 0:
        return Poly([1])
    a = [moment(kind, k) for k in range(2 * n)]
    # rows i = 0..n, columns 0..n-1 hold a(i + j); the last column holds x^i
    body = [[a[i + j] for j in range(n)] for i in range(n + 1)]
    lead = det_oracle(Mat.from_rows(body[:n]))
    if lead == 0:
        raise SingularMatrixError(n - 1, f"Hankel determinant of order {n - 1} vanishes")
    coeffs = []
    for i in range(n + 1):
        minor = Mat.from_rows(body[:i] + body[i + 1:])
        coeffs.append((-1) ** (i + n) * det_oracle(minor) / lead)
    return Poly(coeffs)


def norm_squared(kind: MomentKind, n: int) -> Fraction:
    """F(p_n^2) = t(0) ... t(n-1)."""
    return jacobi(kind).tprod(n)


def kernel_inverse(kind: MomentKind, n: int) -> Mat:
    """Inverse Hankel matrix as the coefficient matrix of the kernel polynomial

        K_n(x, y) = sum_{k<=n} p_k(x) p_k(y) / (t(0)...t(k-1)).
    """
    jc = jacobi(kind)
    ps = orthogonal_polys(kind, n)
    b = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    norm = Fraction(1)
    for k, p in enumerate(ps):
        if k:
            norm *= jc.tseq(k - 1)
        c = p.coeffs
        for i, ci in enumerate(c):
            if not ci:
                continue
            w = ci / norm
            row = b[i]
            for j, cj in enumerate(c):
                row[j] += w * cj
    return Mat.from_rows(b)
