"""Multivariate polynomials over Q(i) in named formal parameters.

These carry the unknown jet data of a potential (free normal derivatives,
the family parameter of the cubic term, the formal constant ln2, ...)
through every computation.  A polynomial is a map from exponent vectors to
GaussianRational coefficients; zero coefficients are never stored, and the
exponent vector is aligned with a sorted tuple of parameter names, which
fixes a canonical graded-lexicographic term order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .scalars import GQ, GaussianRational, RationalLike


class StructureError(ValueError):
    """Raised when operands disagree structurally (parameter tables, ...)."""


def _merge_names(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    if a == b:
        return a
    return tuple(sorted(set(a) | set(b)))


class ParamPoly:
    """Polynomial in named parameters with GaussianRational coefficients."""

    __slots__ = ("names", "terms")

    def __init__(self, names: Iterable[str], terms: Mapping[tuple[int, ...], GQ] | None = None):
        names = tuple(names)
        if list(names) != sorted(set(names)):
            raise StructureError(f"parameter table must be sorted and duplicate-free: {names}")
        object.__setattr__(self, "names", names)
        clean: dict[tuple[int, ...], GQ] = {}
        if terms:
            n = len(names)
            for exp, c in terms.items():
                if len(exp) != n:
                    raise StructureError(f"exponent {exp} does not match table {names}")
                c = GQ.coerce(c)
                if not c.is_zero():
                    clean[tuple(exp)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ParamPoly is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def const(value: GQ | RationalLike, names: Iterable[str] = ()) -> "ParamPoly":
        names = tuple(names)
        value = GQ.coerce(value)
        if value.is_zero():
            return ParamPoly(names)
        return ParamPoly(names, {(0,) * len(names): value})

    @staticmethod
    def var(name: str, names: Iterable[str] | None = None) -> "ParamPoly":
        names = tuple(names) if names is not None else (name,)
        if name not in names:
            raise StructureError(f"{name!r} not in table {names}")
        exp = tuple(1 if nm == name else 0 for nm in names)
        return ParamPoly(names, {exp: GQ(1)})

    @staticmethod
    def zero(names: Iterable[str] = ()) -> "ParamPoly":
        return ParamPoly(names)

    # -- table alignment -----------------------------------------------------

    def with_names(self, names: Iterable[str]) -> "ParamPoly":
        """Re-embed into a larger (sorted) parameter table."""
        names = tuple(names)
        if names == self.names:
            return self
        if not set(self.names) <= set(names):
            raise StructureError(f"cannot embed table {self.names} into {names}")
        pos = [names.index(nm) for nm in self.names]
        out: dict[tuple[int, ...], GQ] = {}
        for exp, c in self.terms.items():
            new = [0] * len(names)
            for p, e in zip(pos, exp):
                new[p] = e
            out[tuple(new)] = c
        return ParamPoly(names, out)

    @staticmethod
    def _aligned(a: "ParamPoly", b: "ParamPoly"):
        if a.names == b.names:
            return a, b
        names = _merge_names(a.names, b.names)
        return a.with_names(names), b.with_names(names)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return all(not any(exp) for exp in self.terms)

    def as_const(self) -> GQ:
        if self.is_zero():
            return GQ(0)
        if not self.is_const():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        return max((sum(exp) for exp in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        if name not in self.names:
            return 0
        i = self.names.index(name)
        return max((exp[i] for exp in self.terms), default=0)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = ParamPoly.const(other, self.names)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        a, b = ParamPoly._aligned(self, other)
        out = dict(a.terms)
        for exp, c in b.terms.items():
            s = out.get(exp)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(exp, None)
            else:
                out[exp] = s
        return ParamPoly(a.names, out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = ParamPoly.const(other, self.names)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = GQ.coerce(other)
            if c.is_zero():
                return ParamPoly(self.names)
            return ParamPoly(self.names, {e: v * c for e, v in self.terms.items()})
        if not isinstance(other, ParamPoly):
            return NotImplemented
        a, b = ParamPoly._aligned(self, other)
        if not a.terms or not b.terms:
            return ParamPoly(a.names)
        # fast path: scalar factor
        if a.is_const():
            return b * a.as_const()
        if b.is_const():
            return a * b.as_const()
        out: dict[tuple[int, ...], GQ] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                exp = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(exp)
                p = c1 * c2
                s = p if s is None else s + p
                if s.is_zero():
                    out.pop(exp, None)
                else:
                    out[exp] = s
        return ParamPoly(a.names, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ParamPoly):
            other = other.as_const()
        c = GQ.coerce(other)
        return self * (GQ(1) / c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a ParamPoly")
        out = ParamPoly.const(1, self.names)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- calculus / substitution ---------------------------------------------

    def derivative(self, name: str) -> "ParamPoly":
        if name not in self.names:
            return ParamPoly(self.names)
        i = self.names.index(name)
        out: dict[tuple[int, ...], GQ] = {}
        for exp, c in self.terms.items():
            if exp[i]:
                new = list(exp)
                new[i] -= 1
                out[tuple(new)] = c * exp[i]
        return ParamPoly(self.names, out)

    def coefficient(self, name: str, power: int) -> "ParamPoly":
        """Coefficient of name**power, as a polynomial in the remaining table."""
        if name not in self.names:
            return self if power == 0 else ParamPoly(self.names)
        i = self.names.index(name)
        rest = tuple(nm for nm in self.names if nm != name)
        out: dict[tuple[int, ...], GQ] = {}
        for exp, c in self.terms.items():
            if exp[i] == power:
                out[exp[:i] + exp[i + 1:]] = c
        return ParamPoly(rest, out)

    def substitute(self, assignment: Mapping[str, "ParamPoly | GQ | RationalLike"]) -> "ParamPoly":
        """Substitute parameters by polynomials or scalars, exactly."""
        relevant = {k: v for k, v in assignment.items() if k in self.names}
        if not relevant:
            return self
        kept = tuple(nm for nm in self.names if nm not in relevant)
        values: dict[str, ParamPoly] = {}
        target = set(kept)
        for k, v in relevant.items():
            if not isinstance(v, ParamPoly):
                v = ParamPoly.const(GQ.coerce(v))
            values[k] = v
            target |= set(v.names)
        names = tuple(sorted(target))
        out = ParamPoly(names)
        base = {nm: ParamPoly.var(nm, names) if nm in kept else values[nm].with_names(names)
                for nm in self.names}
        for exp, c in self.terms.items():
            term = ParamPoly.const(c, names)
            for nm, e in zip(self.names, exp):
                if e:
                    term = term * base[nm] ** e
            out = out + term
        return out

    # -- comparison / rendering ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = ParamPoly.const(other, self.names)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        a, b = ParamPoly._aligned(self, other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        """Terms in graded-lexicographic order (canonical)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = []
            cs = str(c)
            if ("+" in cs[1:]) or ("-" in cs[1:]) or "i" in cs:
                cs = f"({cs})"
            for nm, e in zip(self.names, exp):
                if e == 1:
                    factors.append(nm)
                elif e > 1:
                    factors.append(f"{nm}^{e}")
            if not factors:
                parts.append(cs)
            elif cs == "1":
                parts.append("*".join(factors))
            else:
                parts.append(cs + "*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"ParamPoly({self})"

    # -- serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "params": list(self.names),
            "terms": {
                ",".join(map(str, exp)): c.to_json() for exp, c in self.sorted_terms()
            },
        }

    @staticmethod
    def from_json(d: dict) -> "ParamPoly":
        names = tuple(d["params"])
        terms = {}
        for key, cj in d["terms"].items():
            exp = tuple(int(x) for x in key.split(",")) if key else ()
            terms[exp] = GQ.from_json(cj)
        return ParamPoly(names, terms)


def poly_arith(a: ParamPoly, b: ParamPoly, op: str) -> ParamPoly:
    """Strict-table arithmetic on parameter polynomials.

    Operands must share the parameter name table; `op` is one of
    "add" / "mul" / "differentiate" (the latter differentiates `a` with
    respect to the single parameter named by `b`'s table, for symmetry with
    the rest of the exact core this is exposed on ParamPoly directly).
    """
    if a.names != b.names:
        raise StructureError(f"parameter tables differ: {a.names} vs {b.names}")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")
