"""Exact Gaussian-rational scalars.

Every number in the engine is an element of Q(i): a pair of
arbitrary-precision rationals (re, im).  `fractions.Fraction` keeps both
components in lowest terms with positive denominator, so equality is
literal structural equality and no rounding can occur anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


def as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def rational_to_str(x: Fraction) -> str:
    """Serialize a rational as "p/q" with q > 0, lowest terms."""
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(s: str) -> Fraction:
    p, _, q = s.partition("/")
    if not q:
        return Fraction(int(p))
    return Fraction(int(p), int(q))


class GaussianRational:
    """An element of Q(i), stored as exact real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", as_fraction(re))
        object.__setattr__(self, "im", as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- coercion ----------------------------------------------------------

    @staticmethod
    def coerce(x: "GaussianRational | RationalLike") -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(as_fraction(x))

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_rational(self) -> bool:
        return not self.im

    def as_rational(self) -> Fraction:
        if self.im:
            raise ValueError(f"{self!r} is not rational")
        return self.re

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        if not self.im and not other.im:
            return GaussianRational(self.re * other.re)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(i)")
        if not self.im and not other.im:
            return GaussianRational(self.re / other.re)
        n = other.re * other.re + other.im * other.im
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return GaussianRational(1) / self ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    # -- rendering ----------------------------------------------------------

    def __repr__(self):
        if not self.im:
            return f"GQ({self.re})"
        return f"GQ({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"re": rational_to_str(self.re), "im": rational_to_str(self.im)}

    @staticmethod
    def from_json(d: dict) -> "GaussianRational":
        return GaussianRational(rational_from_str(d["re"]), rational_from_str(d["im"]))


GQ = GaussianRational
ZERO = GQ(0)
ONE = GQ(1)
I = GQ(0, 1)
