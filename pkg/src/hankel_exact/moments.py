"""Moment families and the linear functional they induce.

Three families are supported:

* ``hilbert``      a(n) = t^n / (n + 1)
* ``generalized``  a(n) = s t^n / (n + s)
* ``harmonic``     a(n) = H_n(t, s) = sum_{k=1}^n s t^k / (k + s - 1)

The first two define a functional F(x^n) = a(n) with F(1) = 1.  Harmonic
moments start at H_0 = 0 and are only used to build Hankel matrices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .exact_core import Poly, RationalLike, as_rational, format_rational

__all__ = [
    "Family",
    "MomentKind",
    "UnsupportedKindError",
    "moment",
    "moments",
    "apply_functional",
    "harmonic_number",
]


class Family(str, Enum):
    HILBERT = "hilbert"
    GENERALIZED = "generalized"
    HARMONIC = "harmonic"


class UnsupportedKindError(ValueError):
    """The operation is not defined for this moment family."""


def _check_s(s: Fraction) -> None:
    if s == 0 or (s.denominator == 1 and s < 0):
        raise ValueError(f"s must avoid 0 and the negative integers, got {s}")


@dataclass(frozen=True)
class MomentKind:
    """Parameter record selecting a moment family.

    ``t`` must be nonzero; ``s`` must avoid 0 and the negative integers and
    is pinned to 1 for the Hilbert family.
    """

    family: Family
    t: Fraction = Fraction(1)
    s: Fraction = Fraction(1)

    def __post_init__(self):
        fam = Family(self.family)
        t = as_rational(self.t)
        s = as_rational(self.s)
        if t == 0:
            raise ValueError("t = 0 degenerates every Hankel matrix")
        _check_s(s)
        if fam is Family.HILBERT and s != 1:
            raise ValueError("the hilbert family has s = 1")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "s", s)

    @classmethod
    def hilbert(cls, t: RationalLike = 1) -> "MomentKind":
        return cls(Family.HILBERT, as_rational(t), Fraction(1))

    @classmethod
    def generalized(cls, t: RationalLike = 1, s: RationalLike = 1) -> "MomentKind":
        return cls(Family.GENERALIZED, as_rational(t), as_rational(s))

    @classmethod
    def harmonic(cls, t: RationalLike = 1, s: RationalLike = 1) -> "MomentKind":
        return cls(Family.HARMONIC, as_rational(t), as_rational(s))

    @property
    def has_functional(self) -> bool:
        return self.family is not Family.HARMONIC

    def require_functional(self) -> None:
        if not self.has_functional:
            raise UnsupportedKindError(
                "harmonic moments have a(0) = 0 and do not define a normalized functional"
            )

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "t": format_rational(self.t),
            "s": format_rational(self.s),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "MomentKind":
        return cls(Family(d["family"]), as_rational(d.get("t", 1)), as_rational(d.get("s", 1)))

    @classmethod
    def from_json(cls, text: str) -> "MomentKind":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        if self.family is Family.HILBERT:
            return f"hilbert(t={self.t})"
        return f"{self.family.value}(t={self.t}, s={self.s})"


@lru_cache(maxsize=None)
def _harmonic_prefix(t: Fraction, s: Fraction, n: int) -> tuple[Fraction, ...]:
    out = [Fraction(0)]
    acc = Fraction(0)
    tk = Fraction(1)
    for k in range(1, n + 1):
        tk *= t
        acc += s * tk / (k + s - 1)
        out.append(acc)
    return tuple(out)


def harmonic_number(n: int, t: RationalLike = 1, s: RationalLike = 1) -> Fraction:
    """H_n(t, s); plain H_n for the defaults."""
    if n < 0:
        raise ValueError("n must be non-negative")
    t, s = as_rational(t), as_rational(s)
    _check_s(s)
    # grow in blocks so repeated calls share the cache
    size = max(16, 1 << n.bit_length())
    return _harmonic_prefix(t, s, size)[n]


def moment(kind: MomentKind, n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be non-negative")
    t, s = kind.t, kind.s
    if kind.family is Family.HILBERT:
        return t**n / (n + 1)
    if kind.family is Family.GENERALIZED:
        return s * t**n / (n + s)
    return harmonic_number(n, t, s)


def moments(kind: MomentKind, nmax: int) -> list[Fraction]:
    """a(0), ..., a(nmax)."""
    return [moment(kind, n) for n in range(nmax + 1)]


def apply_functional(kind: MomentKind, p: Poly) -> Fraction:
    """F(p) = sum_k p_k a(k)."""
    kind.require_functional()
    return sum((c * moment(kind, k) for k, c in enumerate(p.coeffs) if c), Fraction(0))
