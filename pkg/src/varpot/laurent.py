"""Exact Laurent expansions at t = infinity.

A series stores coefficients for exponents topature down to -depth, where
`depth` is the guaranteed-sound truncation order: arithmetic tracks how far
each result can be trusted (a product is valid only down to the min of the
operands' guarantees shifted by the partner's top degree).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .params import ParamPoly
from .polyt import TPoly
from .ratfunc import RatFunc
from .scalars import GQ


class TruncationError(RuntimeError):
    """Requested coefficient lies below the guaranteed truncation depth."""


class LaurentSeries:
    __slots__ = ("terms", "depth")

    def __init__(self, terms: Mapping[int, ParamPoly], depth: int):
        clean = {e: c for e, c in terms.items() if not c.is_zero()}
        for e in clean:
            if e < -depth:
                raise ValueError(f"stored exponent {e} below declared depth {depth}")
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "depth", depth)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    # -- queries --------------------------------------------------------------

    def top(self) -> int:
        return max(self.terms, default=-self.depth)

    def coeff(self, e: int) -> ParamPoly:
        if e < -self.depth:
            raise TruncationError(f"coefficient of t^{e} not guaranteed (depth {self.depth})")
        return self.terms.get(e, ParamPoly.zero())

    def residue(self) -> ParamPoly:
        """Coefficient of 1/t; requires guaranteed depth >= 1."""
        if self.depth < 1:
            raise TruncationError("series not expanded deep enough for a residue")
        return self.terms.get(-1, ParamPoly.zero())

    def is_zero(self) -> bool:
        return not self.terms

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        depth = min(self.depth, other.depth)
        out: dict[int, ParamPoly] = {}
        for e, c in list(self.terms.items()) + list(other.terms.items()):
            if e < -depth:
                continue
            s = out.get(e)
            out[e] = c if s is None else s + c
        return LaurentSeries(out, depth)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries({e: -c for e, c in self.terms.items()}, self.depth)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def scale(self, c) -> "LaurentSeries":
        return LaurentSeries({e: v * c for e, v in self.terms.items()}, self.depth)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by t**k."""
        return LaurentSeries({e + k: v for e, v in self.terms.items()}, self.depth - k)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        # sound truncation: min over each operand's guarantee minus the
        # partner's top degree
        depth = min(self.depth - other.top(), other.depth - self.top())
        out: dict[int, ParamPoly] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                if e < -depth:
                    continue
                p = c1 * c2
                s = out.get(e)
                out[e] = p if s is None else s + p
        return LaurentSeries(out, depth)

    def __pow__(self, n: int) -> "LaurentSeries":
        if n < 0:
            raise ValueError("negative power of a LaurentSeries")
        if n == 0:
            return LaurentSeries({0: ParamPoly.const(1)}, self.depth)
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        depth = min(self.depth, other.depth)
        es = {e for e in self.terms if e >= -depth} | {e for e in other.terms if e >= -depth}
        return all(self.coeff(e) == other.coeff(e) for e in es)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            if e == 0:
                parts.append(cs)
            else:
                tp = "t" if e == 1 else f"t^{e}"
                parts.append(tp if cs == "1" else f"{cs}*{tp}")
        return " + ".join(parts)

    __repr__ = __str__


def from_tpoly(p: TPoly, depth: int) -> LaurentSeries:
    return LaurentSeries({j: c for j, c in enumerate(p.coeffs)}, depth)


@lru_cache(maxsize=None)
def _inv_monic_den_coeffs(den_coeffs: tuple, depth: int) -> tuple:
    """Expansion of 1/den at infinity for monic parameter-free den, as a tuple
    of (exponent, Fraction-free GQ) pairs.  Cached; results are immutable."""
    den = TPoly([ParamPoly.const(GQ.coerce(c)) for c in den_coeffs])
    d = den.degree()
    # 1/den = t^-d * 1/(1 + u), u = sum_{j<d} den_j t^(j-d)
    u = {j - d: den.coeff(j).as_const() for j in range(d) if not den.coeff(j).is_zero()}
    out = {0: GQ(1)}
    # iterate: inv = 1 - u*inv, computed degreewise down to -(depth + d)
    need = depth + d
    for e in range(1, need + 1):
        acc = GQ(0)
        for ue, uc in u.items():
            prev = out.get(-e - ue)
            if prev is not None:
                acc = acc - uc * prev
        if not acc.is_zero():
            out[-e] = acc
    return tuple((e - d, c) for e, c in out.items())


def expand_ratfunc(f: RatFunc, depth: int) -> LaurentSeries:
    """Exact expansion of f at infinity, guaranteed down to t**(-depth)."""
    num = from_tpoly(f.num, depth + max(f.den.degree(), 0) + 1)
    if f.den.degree() == 0:
        return LaurentSeries(dict(num.terms), depth)
    key = tuple(
        (c.as_const().re if c.as_const().is_rational() else c.as_const())
        for c in f.den.coeffs
    )
    inv_terms = _inv_monic_den_coeffs(key, depth + max(f.num.degree(), 0) + 1)
    inv = LaurentSeries({e: ParamPoly.const(c) for e, c in inv_terms},
                        depth + max(f.num.degree(), 0) + 1)
    prod = num * inv
    return LaurentSeries({e: c for e, c in prod.terms.items() if e >= -depth}, depth)


def arctanh_at_infinity(depth: int) -> LaurentSeries:
    """arctanh(1/t) = sum_{j>=0} t^-(2j+1)/(2j+1), down to t**(-depth)."""
    terms = {}
    j = 0
    while 2 * j + 1 <= depth:
        terms[-(2 * j + 1)] = ParamPoly.const(Fraction(1, 2 * j + 1))
        j += 1
    return LaurentSeries(terms, depth)


def log_t2m1_tail_at_infinity(depth: int) -> LaurentSeries:
    """ln(t^2-1) - 2 ln t = ln(1 - t^-2) = -sum_{j>=1} t^(-2j)/j."""
    terms = {}
    j = 1
    while 2 * j <= depth:
        terms[-2 * j] = ParamPoly.const(Fraction(-1, j))
        j += 1
    return LaurentSeries(terms, depth)
