"""Dense univariate polynomials in t with ParamPoly coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .params import ParamPoly, StructureError
from .scalars import GQ, GaussianRational


def _coerce_coeff(c) -> ParamPoly:
    if isinstance(c, ParamPoly):
        return c
    return ParamPoly.const(GQ.coerce(c))


class TPoly:
    """Polynomial in t; coeffs[j] is the ParamPoly coefficient of t**j."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [_coerce_coeff(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TPoly is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def const(c) -> "TPoly":
        return TPoly([c])

    @staticmethod
    def t_power(n: int, c=1) -> "TPoly":
        return TPoly([0] * n + [c])

    @staticmethod
    def t() -> "TPoly":
        return TPoly([0, 1])

    @staticmethod
    def t2m1(power: int = 1) -> "TPoly":
        """(t^2 - 1)**power."""
        return TPoly([-1, 0, 1]) ** power

    # -- basic queries ------------------------------------------------------

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_param_free(self) -> bool:
        return all(c.is_const() for c in self.coeffs)

    def coeff(self, j: int) -> ParamPoly:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return ParamPoly.zero()

    def leading(self) -> ParamPoly:
        if not self.coeffs:
            return ParamPoly.zero()
        return self.coeffs[-1]

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, ParamPoly)):
            other = TPoly.const(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly([self.coeff(j) + other.coeff(j) for j in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return TPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, ParamPoly)):
            other = TPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, ParamPoly)):
            c = _coerce_coeff(other)
            return TPoly([a * c for a in self.coeffs])
        if not isinstance(other, TPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return TPoly()
        out = [ParamPoly.zero() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a TPoly")
        out = TPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, ParamPoly)):
            other = TPoly.const(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(self.coeffs)

    # -- calculus ----------------------------------------------------------------

    def derivative(self) -> "TPoly":
        return TPoly([self.coeffs[j] * j for j in range(1, len(self.coeffs))])

    def antiderivative(self) -> "TPoly":
        return TPoly([ParamPoly.zero()] + [c / Fraction(j + 1) for j, c in enumerate(self.coeffs)])

    def defint_sym(self) -> ParamPoly:
        """Exact integral over [-1, 1]: only even powers contribute 2/(j+1)."""
        total = ParamPoly.zero()
        for j, c in enumerate(self.coeffs):
            if j % 2 == 0:
                total = total + c * Fraction(2, j + 1)
        return total

    def eval_scalar(self, x: GQ | int | Fraction) -> ParamPoly:
        x = GQ.coerce(x)
        acc = ParamPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- division ------------------------------------------------------------------

    def divmod_scalar_den(self, den: "TPoly") -> tuple["TPoly", "TPoly"]:
        """Long division by a parameter-free polynomial with invertible leading term."""
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if not den.is_param_free():
            raise StructureError("denominator must be parameter-free")
        lead = den.leading().as_const()
        rem = list(self.coeffs)
        dq = den.degree()
        if self.degree() < dq:
            return TPoly(), self
        q = [ParamPoly.zero()] * (self.degree() - dq + 1)
        for j in range(self.degree() - dq, -1, -1):
            c = rem[j + dq] * (GQ(1) / lead)
            if not c.is_zero():
                q[j] = c
                for i, d in enumerate(den.coeffs):
                    rem[j + i] = rem[j + i] - c * d
        return TPoly(q), TPoly(rem[:dq])

    # -- rendering ---------------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c.is_zero():
                continue
            cs = str(c)
            if " " in cs or "+" in cs[1:]:
                cs = f"({cs})"
            if j == 0:
                parts.append(cs)
            else:
                tp = "t" if j == 1 else f"t^{j}"
                parts.append(tp if cs == "1" else f"{cs}*{tp}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TPoly({self})"

    def to_json(self) -> dict:
        return {str(j): c.to_json() for j, c in enumerate(self.coeffs) if not c.is_zero()}
