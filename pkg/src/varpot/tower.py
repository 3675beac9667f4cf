"""The differential algebra housing every variational-equation solution.

Generators over the rational functions in t (coefficients RatFunc, with the
formal constant ln2 living in the parameter ring):

    L1 = log(t-1)        L1' = 1/(t-1)
    L2 = log(t+1)        L2' = 1/(t+1)
    LT = log(t)          LT' = 1/t
    DL = dilog((t+1)/2)  DL' = (L2 - ln2)/(1-t)

arctanh(1/t) is always the combination (L2 - L1)/2 and ln(t^2-1) is
L1 + L2; no rewriting between generators ever happens implicitly, so class
membership is a syntactic check on exponents.

Integration is by parts on generator monomials (descending), Hermite
reduction on the rational coefficients, residues matched against the log
generators, and the one dilogarithm pattern (L2 + const)/(t-1).  Anything
whose primitive needs a generator outside this tower raises
NewTranscendentalNeeded carrying the reduced integrand.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from .laurent import (LaurentSeries, arctanh_at_infinity, expand_ratfunc,
                      log_t2m1_tail_at_infinity)
from .params import ParamPoly
from .polyt import TPoly
from .ratfunc import RatFunc, partial_fractions
from .scalars import GQ, GaussianRational

GEN_NAMES = ("L1", "L2", "LT", "DL")
UNIT = (0, 0, 0, 0)
LN2 = "ln2"
LOG_T_SYMBOL = "log_t"  # formal stand-in for ln t inside shifted residues

_ROOT_GEN = {1: 0, -1: 1, 0: 2}  # denominator root -> climbing generator index


class NewTranscendentalNeeded(ArithmeticError):
    """The primitive leaves the four-generator tower."""

    def __init__(self, integrand: "TowerElement"):
        super().__init__(f"primitive needs a new transcendental for: {integrand}")
        self.integrand = integrand


class CertificationError(AssertionError):
    """An internal exactness certification failed (never expected)."""


class TowerElement:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int, int], RatFunc] | None = None):
        clean: dict[tuple[int, int, int, int], RatFunc] = {}
        if terms:
            for mono, f in terms.items():
                f = RatFunc.coerce(f)
                if not f.is_zero():
                    clean[tuple(mono)] = f
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TowerElement is immutable")

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def coerce(x) -> "TowerElement":
        if isinstance(x, TowerElement):
            return x
        return TowerElement({UNIT: RatFunc.coerce(x)})

    @staticmethod
    def zero() -> "TowerElement":
        return TowerElement()

    @staticmethod
    def gen(i: int, power: int = 1) -> "TowerElement":
        mono = [0, 0, 0, 0]
        mono[i] = power
        return TowerElement({tuple(mono): RatFunc.one()})

    @staticmethod
    def rational(f) -> "TowerElement":
        return TowerElement({UNIT: RatFunc.coerce(f)})

    @staticmethod
    def arctanh() -> "TowerElement":
        """arctanh(1/t), stored as (L2 - L1)/2."""
        return TowerElement({(0, 1, 0, 0): RatFunc.coerce(Fraction(1, 2)),
                             (1, 0, 0, 0): RatFunc.coerce(Fraction(-1, 2))})

    @staticmethod
    def log_t2m1() -> "TowerElement":
        """ln(t^2 - 1) = L1 + L2."""
        return TowerElement({(1, 0, 0, 0): RatFunc.one(), (0, 1, 0, 0): RatFunc.one()})

    # -- queries ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return all(m == UNIT for m in self.terms)

    def rational_part(self) -> RatFunc:
        return self.terms.get(UNIT, RatFunc.zero())

    def as_ratfunc(self) -> RatFunc:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.rational_part()

    def degree_in_gen(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=0)

    def dl_degree(self) -> int:
        return self.degree_in_gen(3)

    def coeff(self, mono: tuple[int, int, int, int]) -> RatFunc:
        return self.terms.get(tuple(mono), RatFunc.zero())

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    # -- arithmetic ------------------------------------------------------------------

    def __add__(self, other):
        other = TowerElement.coerce(other)
        out = dict(self.terms)
        for m, f in other.terms.items():
            s = out.get(m)
            s = f if s is None else s + f
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return TowerElement(out)

    __radd__ = __add__

    def __neg__(self):
        return TowerElement({m: -f for m, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-TowerElement.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, ParamPoly, TPoly, RatFunc)):
            f = RatFunc.coerce(other)
            if f.is_zero():
                return TowerElement()
            return TowerElement({m: g * f for m, g in self.terms.items()})
        if not isinstance(other, TowerElement):
            return NotImplemented
        out: dict[tuple, RatFunc] = {}
        for m1, f1 in self.terms.items():
            for m2, f2 in other.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                p = f1 * f2
                s = out.get(m)
                s = p if s is None else s + p
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return TowerElement(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a TowerElement")
        out = TowerElement.coerce(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        try:
            other = TowerElement.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return not self.is_zero()

    def substitute_params(self, assignment: Mapping) -> "TowerElement":
        return TowerElement({m: f.substitute_params(assignment) for m, f in self.terms.items()})

    # -- rendering ----------------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, f in self.sorted_terms():
            fs = str(f)
            if " " in fs and not (fs.startswith("(") and fs.endswith(")")):
                fs = f"({fs})"
            gens = []
            for name, e in zip(GEN_NAMES, mono):
                if e == 1:
                    gens.append(name)
                elif e > 1:
                    gens.append(f"{name}^{e}")
            if not gens:
                parts.append(fs)
            elif fs == "1":
                parts.append("*".join(gens))
            else:
                parts.append(fs + "*" + "*".join(gens))
        return " + ".join(parts)

    def __repr__(self):
        return f"TowerElement({self})"


ARCTANH = TowerElement.arctanh()
LOG_T2M1 = TowerElement.log_t2m1()


def _ln2_poly() -> ParamPoly:
    return ParamPoly.var(LN2)


def differentiate(e: TowerElement) -> TowerElement:
    """Exact derivative; a derivation extending d/dt on RatFunc."""
    out: dict[tuple, RatFunc] = {}

    def add(mono, f):
        if f.is_zero():
            return
        s = out.get(mono)
        s = f if s is None else s + f
        if s.is_zero():
            out.pop(mono, None)
        else:
            out[mono] = s

    t_m1 = RatFunc(TPoly([-1, 1]))
    t_p1 = RatFunc(TPoly([1, 1]))
    t_ = RatFunc(TPoly([0, 1]))
    for mono, f in e.terms.items():
        add(mono, f.derivative())
        l1, l2, lt, dl = mono
        if l1:
            add((l1 - 1, l2, lt, dl), f * l1 / t_m1)
        if l2:
            add((l1, l2 - 1, lt, dl), f * l2 / t_p1)
        if lt:
            add((l1, l2, lt - 1, dl), f * lt / t_)
        if dl:
            # DL' = (L2 - ln2)/(1-t) = -(L2 - ln2)/(t-1)
            add((l1, l2 + 1, lt, dl - 1), -(f * dl) / t_m1)
            add((l1, l2, lt, dl - 1), f * dl * _ln2_poly() / t_m1)
    return TowerElement(out)


def _rational_antiderivative(f: RatFunc) -> TowerElement:
    """Primitive of a rational function inside the tower (no constant)."""
    pf = partial_fractions(f)
    out = TowerElement.rational(RatFunc(pf.poly.antiderivative()))
    for (r, m), c in pf.parts.items():
        lin = TPoly([-r, 1]) if r else TPoly([0, 1])
        if m >= 2:
            out = out + TowerElement.rational(
                RatFunc(TPoly.const(c * Fraction(-1, m - 1)), lin ** (m - 1)))
        else:
            out = out + TowerElement.gen(_ROOT_GEN[r]) * c
    return out


_DL_PATTERN_RESULT = None


def _dl_pattern_result() -> TowerElement:
    # int L2/(t-1) dt = -DL + ln2*L1   (from DL' = (L2 - ln2)/(1-t))
    global _DL_PATTERN_RESULT
    if _DL_PATTERN_RESULT is None:
        _DL_PATTERN_RESULT = (TowerElement.gen(3) * (-1)
                              + TowerElement.gen(0) * _ln2_poly())
    return _DL_PATTERN_RESULT


def integrate(e: TowerElement) -> TowerElement:
    """Primitive with zero constant of integration.

    Raises NewTranscendentalNeeded when the primitive is outside the tower,
    carrying the reduced integrand at the point of failure.
    """
    original = e
    result = TowerElement.zero()
    work = e
    visited: set[tuple[tuple, int]] = set()
    while not work.is_zero():
        mono, f = max(work.terms.items(),
                      key=lambda kv: (kv[0][3], sum(kv[0][:3]), kv[0][:3]))
        if mono == UNIT:
            contrib = _rational_antiderivative(f)
        else:
            pf = partial_fractions(f)
            # non-residue piece integrates directly against the monomial
            c_rat = RatFunc(pf.poly.antiderivative())
            for (r, m), c in pf.parts.items():
                if m >= 2:
                    lin = TPoly([-r, 1]) if r else TPoly([0, 1])
                    c_rat = c_rat + RatFunc(TPoly.const(c * Fraction(-1, m - 1)),
                                            lin ** (m - 1))
            contrib = TowerElement({mono: c_rat}) if not c_rat.is_zero() else TowerElement.zero()
            for (r, m), rho in pf.parts.items():
                if m != 1:
                    continue
                if mono == (0, 1, 0, 0) and r == 1:
                    # the dilogarithm pattern (L2 + const)/(t-1)
                    contrib = contrib + _dl_pattern_result() * rho
                    continue
                if mono[3] > 0:
                    raise NewTranscendentalNeeded(work)
                gi = _ROOT_GEN[r]
                if (mono, r) in visited:
                    raise NewTranscendentalNeeded(work)
                visited.add((mono, r))
                climbed = list(mono)
                climbed[gi] += 1
                coeff = ParamPoly.const(Fraction(1, mono[gi] + 1)) * rho
                contrib = contrib + TowerElement({tuple(climbed): RatFunc.coerce(coeff)})
        if contrib.is_zero():
            raise NewTranscendentalNeeded(work)
        result = result + contrib
        work = work - differentiate(contrib)
    if differentiate(result) != original:
        raise CertificationError("integrate() produced a non-primitive")
    return result


def monodromy_class(e: TowerElement) -> str:
    """"NonAbelian" iff a dilogarithm survives in canonical form."""
    return "NonAbelian" if e.dl_degree() >= 1 else "Abelian"


# -- (A, B) coordinates -------------------------------------------------------
#
# A = arctanh(1/t) = (L2 - L1)/2 and B = ln(t^2-1) = L1 + L2 generate the
# same ring as (L1, L2):  L1 = B/2 - A,  L2 = B/2 + A.  The rewrite makes
# membership in the solution classes a syntactic test.

def to_AB(e: TowerElement) -> dict[tuple[int, int, int, int], RatFunc]:
    """Rewrite (L1, L2) exponents into (A, B) exponents, exactly."""
    out: dict[tuple, RatFunc] = {}
    for (l1, l2, lt, dl), f in e.terms.items():
        # (B/2 - A)^l1 (B/2 + A)^l2
        for i in range(l1 + 1):
            ci = comb(l1, i) * Fraction(1, 2 ** (l1 - i)) * (-1) ** i
            for j in range(l2 + 1):
                cj = comb(l2, j) * Fraction(1, 2 ** (l2 - j))
                key = (i + j, (l1 - i) + (l2 - j), lt, dl)
                add = f * (ci * cj)
                s = out.get(key)
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
    return out


def from_AB(terms: Mapping[tuple[int, int, int, int], RatFunc]) -> TowerElement:
    out = TowerElement.zero()
    for (a, b, lt, dl), f in terms.items():
        out = out + (ARCTANH ** a) * (LOG_T2M1 ** b) * TowerElement(
            {(0, 0, lt, dl): RatFunc.coerce(1)}) * f
    return out


def arctanh_poly_part(e: TowerElement) -> dict[int, RatFunc] | None:
    """If e lies in C(t)[arctanh(1/t)], return {A-degree: coefficient}."""
    ab = to_AB(e)
    out: dict[int, RatFunc] = {}
    for (a, b, lt, dl), f in ab.items():
        if b or lt or dl:
            return None
        out[a] = f
    return out


def ab_log_part(e: TowerElement) -> dict[tuple[int, int], RatFunc] | None:
    """If e lies in C(t)[A, B] (no LT, no DL), return {(a, b): coefficient}."""
    ab = to_AB(e)
    out: dict[tuple[int, int], RatFunc] = {}
    for (a, b, lt, dl), f in ab.items():
        if lt or dl:
            return None
        out[(a, b)] = f
    return out


# -- shifted residues (the monodromy functional) ---------------------------------

def _shifted_residue_terms(terms: Mapping[tuple[int, int], RatFunc],
                           alpha: str) -> ParamPoly:
    """Res_{t=inf} of sum f_{a,b}(t) (A + alpha)^a B^b.

    B expands at infinity as 2*log_t + ln(1 - 1/t^2); log t stays a formal
    symbol so the lnt-graded components of the residue remain split.
    """
    if not terms:
        return ParamPoly.zero()
    depth = 2
    for (a, b), f in terms.items():
        top = f.num.degree() - f.den.degree()
        depth = max(depth, top + 2)
    a_series = arctanh_at_infinity(depth) + LaurentSeries(
        {0: ParamPoly.var(alpha)}, depth)
    b_series = log_t2m1_tail_at_infinity(depth) + LaurentSeries(
        {0: ParamPoly.var(LOG_T_SYMBOL) * 2}, depth)
    total = ParamPoly.zero()
    max_a = max(a for (a, b) in terms)
    max_b = max(b for (a, b) in terms)
    a_pows = [LaurentSeries({0: ParamPoly.const(1)}, depth)]
    for _ in range(max_a):
        a_pows.append(a_pows[-1] * a_series)
    b_pows = [LaurentSeries({0: ParamPoly.const(1)}, depth)]
    for _ in range(max_b):
        b_pows.append(b_pows[-1] * b_series)
    for (a, b), f in terms.items():
        series = expand_ratfunc(f, depth) * a_pows[a] * b_pows[b]
        total = total + series.residue()
    return total


def residue_shift_poly(e: TowerElement, alpha: str = "alpha") -> ParamPoly:
    """Residue at infinity of e with arctanh(1/t) shifted by the formal alpha.

    e must be a polynomial in arctanh(1/t) with RatFunc coefficients; the
    result is an exact polynomial in alpha (and e's other parameters).
    """
    part = arctanh_poly_part(e)
    if part is None:
        raise ValueError("residue_shift_poly needs an arctanh-polynomial input")
    return _shifted_residue_terms({(a, 0): f for a, f in part.items()}, alpha)


def shifted_residue_ab(e: TowerElement, alpha: str = "alpha") -> ParamPoly:
    """Shifted residue for integrands in C(t)[A, B]; lnt-components symbolic."""
    part = ab_log_part(e)
    if part is None:
        raise ValueError("shifted_residue_ab needs a C(t)[A, B] input")
    return _shifted_residue_terms(part, alpha)
