"""
Exact scalar, polynomial and matrix arithmetic over the rationals.

Scalars are :class:`fractions.Fraction`, which already keeps every value in
lowest terms with a positive denominator.  On top of that this module adds a
small dense polynomial type, an immutable dense matrix type, a couple of
combinatorial primitives, and the elimination oracles (`det_oracle`,
`invert_oracle`) that every closed form in the package is checked against.

>>> det_oracle(Mat.from_rows([[1, Fraction(1, 2)], [Fraction(1, 2), Fraction(1, 3)]]))
Fraction(1, 12)
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, lcm
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

__all__ = [
    "Rational",
    "DimensionError",
    "SingularMatrixError",
    "as_rational",
    "format_rational",
    "binomial_general",
    "rising_factorial",
    "Poly",
    "Mat",
    "det_oracle",
    "invert_oracle",
    "poly_eval",
]


class DimensionError(ValueError):
    """Matrix shapes do not fit the requested operation."""


class SingularMatrixError(ArithmeticError):
    """Elimination found no usable pivot.

    ``pivot`` is the column index at which elimination failed.
    """

    def __init__(self, pivot: int, message: str | None = None):
        self.pivot = pivot
        super().__init__(message or f"matrix is singular (no pivot in column {pivot})")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they would silently smuggle rounding into exact work.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def format_rational(q: RationalLike) -> str:
    """Text form ``p/q`` with the sign on ``p``; bare ``p`` when ``q == 1``."""
    return str(as_rational(q))


def binomial_general(x: RationalLike, k: int) -> Fraction:
    """x(x-1)...(x-k+1)/k!  for rational x and integer k >= 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    x = as_rational(x)
    if x.denominator == 1 and x >= 0:
        n = x.numerator
        if k > n:
            return Fraction(0)
        # integer fast path
        k = min(k, n - k)
        num = 1
        for i in range(k):
            num = num * (n - i) // (i + 1)
        return Fraction(num)
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    return num / factorial(k)


def rising_factorial(x: RationalLike, j: int) -> Fraction:
    """x(x+1)...(x+j-1); the empty product for j = 0."""
    if j < 0:
        raise ValueError("j must be non-negative")
    x = as_rational(x)
    out = Fraction(1)
    for i in range(j):
        out *= x + i
    return out


class Poly:
    """Dense univariate polynomial with rational coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``.  Trailing zeros are
    stripped, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        c = [as_rational(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: RationalLike = 1) -> "Poly":
        return cls([0] * k + [coeff])

    @classmethod
    def constant(cls, c: RationalLike) -> "Poly":
        return cls([c])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_monic(self) -> bool:
        return self.leading() == 1

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        n = max(len(self._c), len(other._c))
        return Poly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-a for a in self._c)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return Poly.constant(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            if not self._c or not other._c:
                return Poly()
            out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
            for i, a in enumerate(self._c):
                if a:
                    for j, b in enumerate(other._c):
                        out[i + j] += a * b
            return Poly(out)
        c = as_rational(other)
        return Poly(a * c for a in self._c)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalLike) -> "Poly":
        c = as_rational(other)
        return Poly(a / c for a in self._c)

    def shift_up(self, k: int = 1) -> "Poly":
        """Multiply by x**k."""
        if not self._c:
            return self
        return Poly([0] * k + list(self._c))

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(format_rational(a) for a in self._c)}])"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k, a in enumerate(self._c):
            if a == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and a == 1:
                terms.append(mono)
            elif mono and a == -1:
                terms.append("-" + mono)
            else:
                terms.append(format_rational(a) + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")


def poly_eval(p: Poly, x: RationalLike) -> Fraction:
    return p(x)


class Mat:
    """Immutable dense matrix of Fractions stored row-major."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries: Iterable[RationalLike]):
        e = tuple(as_rational(a) for a in entries)
        if len(e) != rows * cols:
            raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(e)}")
        self.rows = rows
        self.cols = cols
        self._e = e

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "Mat":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, [a for r in rows for a in r])

    @classmethod
    def from_function(cls, rows: int, cols: int, f) -> "Mat":
        return cls(rows, cols, [f(i, j) for i in range(rows) for j in range(cols)])

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls.from_function(n, n, lambda i, j: 1 if i == j else 0)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Mat":
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diagonal(cls, diag: Sequence[RationalLike]) -> "Mat":
        d = list(diag)
        return cls.from_function(len(d), len(d), lambda i, j: d[i] if i == j else 0)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return self._e

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for {self.rows}x{self.cols} matrix")
        return self._e[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._e[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return self._e[j::self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def diag(self) -> list[Fraction]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def transpose(self) -> "Mat":
        return Mat.from_function(self.cols, self.rows, lambda i, j: self[j, i])

    T = property(transpose)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = [other.col(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in ocols:
                out.append(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)))
        return Mat(self.rows, other.cols, out)

    def _same_shape(self, other: "Mat") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(self.rows, self.cols, [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(self.rows, self.cols, [a - b for a, b in zip(self._e, other._e)])

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, [-a for a in self._e])

    def scale(self, c: RationalLike) -> "Mat":
        c = as_rational(c)
        return Mat(self.rows, self.cols, [a * c for a in self._e])

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def is_lower_unitriangular(self) -> bool:
        return self.is_square() and all(
            self[i, j] == (1 if i == j else 0)
            for i in range(self.rows) for j in range(i, self.cols)
        )

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self._e)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._e))

    def __repr__(self) -> str:
        body = ", ".join(
            "[" + ", ".join(format_rational(a) for a in self.row(i)) + "]"
            for i in range(self.rows)
        )
        return f"Mat([{body}])"


def _integer_rows(m: Mat) -> tuple[list[list[int]], Fraction]:
    """Scale each row by the lcm of its denominators.

    Returns the integer rows and the factor ``det(m) = det(int_rows) * factor``.
    """
    rows = []
    factor = Fraction(1)
    for i in range(m.rows):
        r = m.row(i)
        L = 1
        for a in r:
            L = lcm(L, a.denominator)
        rows.append([a.numerator * (L // a.denominator) for a in r])
        factor /= L
    return rows, factor


def det_oracle(m: Mat) -> Fraction:
    """Exact determinant by Bareiss fraction-free elimination.

    Rows are first cleared of denominators so the elimination itself runs on
    Python integers, where every Bareiss division is exact.
    """
    if not m.is_square():
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    a, factor = _integer_rows(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1] * factor


def invert_oracle(m: Mat) -> Mat:
    """Exact inverse by Gauss-Jordan elimination with row pivoting."""
    if not m.is_square():
        raise DimensionError(f"inverse of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    aug = [list(m.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if piv is None:
            raise SingularMatrixError(k)
        aug[k], aug[piv] = aug[piv], aug[k]
        inv_p = 1 / aug[k][k]
        rk = [a * inv_p for a in aug[k]]
        aug[k] = rk
        for i in range(n):
            if i != k and aug[i][k] != 0:
                f = aug[i][k]
                aug[i] = [a - f * b for a, b in zip(aug[i], rk)]
    return Mat(n, n, [a for r in aug for a in r[n:]])
