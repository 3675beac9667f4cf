"""Rational functions in t over the parameter-polynomial coefficient ring.

Denominators are parameter-free and kept monic; common factors (t - r) for
r in {-1, 0, +1} are cancelled exactly.  These three points are the only
denominator roots the rest of the engine ever produces (t = +-1 from the
orbit, t = 0 on the degenerate orbit), and partial-fraction decomposition
is only defined over them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .params import ParamPoly, StructureError
from .polyt import TPoly
from .scalars import GQ, GaussianRational

SUPPORTED_ROOTS = (1, -1, 0)


class UnsupportedDenominatorError(ValueError):
    """Denominator has a root outside {-1, 0, +1}."""


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, TPoly):
            num = TPoly.const(num) if not isinstance(num, (list, tuple)) else TPoly(num)
        if den is None:
            den = TPoly.const(1)
        elif not isinstance(den, TPoly):
            den = TPoly.const(den) if not isinstance(den, (list, tuple)) else TPoly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not den.is_param_free():
            raise StructureError("denominator must be parameter-free")
        num, den = self._normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def _normalize(num: TPoly, den: TPoly) -> tuple[TPoly, TPoly]:
        if num.is_zero():
            return TPoly(), TPoly.const(1)
        # cancel supported linear factors present in both num and den
        for r in SUPPORTED_ROOTS:
            lin = TPoly([-r, 1]) if r else TPoly([0, 1])
            while den.degree() > 0 and den.eval_scalar(r).is_zero() and num.eval_scalar(r).is_zero():
                den, rd = den.divmod_scalar_den(lin)
                num, rn = num.divmod_scalar_den(lin)
                assert rd.is_zero() and rn.is_zero()
        # exact division when the denominator divides the numerator
        if den.degree() > 0:
            q, rem = num.divmod_scalar_den(den)
            if rem.is_zero():
                return q, TPoly.const(1)
        lead = den.leading().as_const()
        if lead != GQ(1):
            inv = GQ(1) / lead
            num = num * inv
            den = den * inv
        return num, den

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, TPoly):
            return RatFunc(x)
        if isinstance(x, (int, Fraction, GaussianRational, ParamPoly)):
            return RatFunc(TPoly.const(x))
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    @staticmethod
    def zero() -> "RatFunc":
        return RatFunc(TPoly())

    @staticmethod
    def one() -> "RatFunc":
        return RatFunc(TPoly.const(1))

    @staticmethod
    def t() -> "RatFunc":
        return RatFunc(TPoly.t())

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def as_tpoly(self) -> TPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not polynomial")
        return self.num

    def is_param_free(self) -> bool:
        return self.num.is_param_free()

    def den_root_orders(self) -> dict[int, int]:
        """Multiplicities of den's roots among {1, -1, 0}; raises if others remain."""
        den = self.den
        orders: dict[int, int] = {}
        for r in SUPPORTED_ROOTS:
            lin = TPoly([-r, 1]) if r else TPoly([0, 1])
            m = 0
            while den.degree() > 0 and den.eval_scalar(r).is_zero():
                den, rem = den.divmod_scalar_den(lin)
                assert rem.is_zero()
                m += 1
            if m:
                orders[r] = m
        if den.degree() > 0:
            raise UnsupportedDenominatorError(f"denominator factor {den} has roots outside {{-1,0,1}}")
        return orders

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        other = RatFunc.coerce(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = RatFunc.coerce(other)
        if self.is_zero() or other.is_zero():
            return RatFunc.zero()
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero RatFunc")
        if not other.num.is_param_free():
            raise StructureError("cannot divide by a parameter-dependent function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc.one() / self ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    # -- calculus ---------------------------------------------------------------------

    def derivative(self) -> "RatFunc":
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def substitute_params(self, assignment: Mapping) -> "RatFunc":
        return RatFunc(TPoly([c.substitute(assignment) for c in self.num.coeffs]), self.den)

    # -- rendering -----------------------------------------------------------------------

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        ns = str(self.num)
        if " " in ns:
            ns = f"({ns})"
        return f"{ns}/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


@dataclass(frozen=True)
class PartialFractions:
    """f = poly + sum over parts[(r, m)] / (t - r)**m."""

    poly: TPoly
    parts: dict = field(default_factory=dict)

    def reconstruct(self) -> RatFunc:
        total = RatFunc(self.poly)
        for (r, m), c in self.parts.items():
            lin = TPoly([-r, 1]) if r else TPoly([0, 1])
            total = total + RatFunc(TPoly.const(c), lin ** m)
        return total

    def residue_at(self, r: int) -> ParamPoly:
        return self.parts.get((r, 1), ParamPoly.zero())


def _shift_poly(p: TPoly, r: int) -> list[ParamPoly]:
    """Coefficients of p(r + s) as a polynomial in s (exact binomial shift)."""
    from math import comb

    n = p.degree()
    out = [ParamPoly.zero() for _ in range(n + 1)]
    rq = GQ(r)
    for j, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        # (r+s)^j = sum_i C(j,i) r^(j-i) s^i
        for i in range(j + 1):
            out[i] = out[i] + c * (comb(j, i) * (rq ** (j - i)))
    return out


def partial_fractions(f: RatFunc) -> PartialFractions:
    """Decompose over poles restricted to {-1, 0, +1}.

    Raises UnsupportedDenominatorError when the denominator has any other
    root, which signals input outside the engine's function class.
    """
    orders = f.den_root_orders()  # raises if unsupported
    quot, rem = f.num.divmod_scalar_den(f.den)
    parts: dict[tuple[int, int], ParamPoly] = {}
    for r, m in orders.items():
        # g(t) = num / prod_{r' != r} (t-r')^{m'}; principal part from the
        # exact Taylor expansion of g at t = r.
        other = TPoly.const(1)
        for r2, m2 in orders.items():
            if r2 != r:
                lin = TPoly([-r2, 1]) if r2 else TPoly([0, 1])
                other = other * lin ** m2
        a = _shift_poly(f.num, r)[: m] or [ParamPoly.zero()]
        b = _shift_poly(other, r)[: m] or [ParamPoly.zero()]
        while len(a) < m:
            a.append(ParamPoly.zero())
        while len(b) < m:
            b.append(ParamPoly.zero())
        b0 = b[0].as_const()
        inv0 = GQ(1) / b0
        series = [ParamPoly.zero()] * m
        for i in range(m):
            acc = a[i]
            for j in range(i):
                acc = acc - series[j] * b[i - j]
            series[i] = acc * inv0
        for i in range(m):
            c = series[i]
            if not c.is_zero():
                parts[(r, m - i)] = c
    return PartialFractions(poly=quot, parts=parts)
