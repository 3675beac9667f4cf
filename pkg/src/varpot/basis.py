"""Solution basis (P_n, Q_n) of the first-order equation

    (1/2)(t^2 - 1) y'' + 2 t y' - lambda y = 0,   lambda = (n-1)(n+2)/2.

P_n comes from the Rodrigues-type formula (t^2-1)^(-1) d^(n-1)[(t^2-1)^n];
Q_n = eps_n P_n arctanh(1/t) + W_n/(t^2-1) with polynomial W_n determined by
the decaying-at-infinity normalization of the reduction-of-order integral
P_n * int dt / ((t^2-1)^2 P_n^2).  Every returned pair is certified by exact
substitution (zero ODE residual, Wronskian = (t^2-1)^(-2) up to the n = 0
sign) before it leaves this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .params import ParamPoly
from .polyt import TPoly
from .ratfunc import RatFunc
from .scalars import GQ
from .tower import (ARCTANH, CertificationError, TowerElement, differentiate)

ALLOWED_EIGENVALUES = "{-1, 0, 2, 5, 9, 14, 20, 27, ...}"


@dataclass(frozen=True)
class EigenIndex:
    """Index n of the allowed eigenvalue (n-1)(n+2)/2."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("eigen index must be a non-negative integer")

    @property
    def eigenvalue(self) -> Fraction:
        return Fraction((self.n - 1) * (self.n + 2), 2)


def eigenvalue_of(n: int) -> Fraction:
    return EigenIndex(n).eigenvalue


@dataclass(frozen=True)
class BasisPair:
    """Certified solution basis for one eigen index.

    For n >= 1, P is polynomial of degree n-1 and W the polynomial part of
    Q = eps * P * arctanh(1/t) + W/(t^2-1).  For n = 0 both members are
    rational: P = t/(t^2-1), Q = 1/(t^2-1), and eps = 0, W = None.
    """

    n: int
    P: RatFunc
    epsilon: Fraction
    W: TPoly | None
    Q: TowerElement

    @property
    def eigenvalue(self) -> Fraction:
        return eigenvalue_of(self.n)

    @property
    def wronskian_constant(self) -> int:
        return -1 if self.n == 0 else 1


def rodrigues_P(n: int) -> TPoly:
    """P_n = (t^2-1)^(-1) d^(n-1)/dt^(n-1) (t^2-1)^n, exact."""
    if n < 1:
        raise ValueError("rodrigues_P needs n >= 1; the n = 0 pair is rational, "
                         "use basis_pair(0)")
    p = TPoly.t2m1(n)
    for _ in range(n - 1):
        p = p.derivative()
    q, rem = p.divmod_scalar_den(TPoly.t2m1())
    if not rem.is_zero():
        raise CertificationError("(t^2-1) does not divide the Rodrigues derivative")
    return q


def epsilon(n: int) -> Fraction:
    """eps_n = 4^(-n) n (n+1) / (n!)^2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Fraction(n * (n + 1), 4 ** n * factorial(n) ** 2)


def ode_apply(y: TowerElement, lam: Fraction) -> TowerElement:
    """(1/2)(t^2-1) y'' + 2 t y' - lambda y, exactly."""
    d1 = differentiate(y)
    d2 = differentiate(d1)
    half_t2m1 = RatFunc(TPoly.t2m1()) * Fraction(1, 2)
    two_t = RatFunc(TPoly([0, 2]))
    return d2 * half_t2m1 + d1 * two_t - y * lam


def _solve_W(n: int) -> TPoly:
    """Unique polynomial (degree <= n) with
    (1/2)(t^2-1) W'' - (1+lambda) W = eps [(t^2-1) P' + t P]."""
    P = rodrigues_P(n)
    eps = epsilon(n)
    rhs = (TPoly.t2m1() * P.derivative() + TPoly.t() * P) * eps
    nn1 = n * (n + 1)  # 2(1 + lambda)
    w = [GQ(0)] * (n + 3)
    for j in range(n, -1, -1):
        # (1/2)[j(j-1) - n(n+1)] w_j - (1/2)(j+2)(j+1) w_{j+2} = rhs_j
        c = Fraction(j * (j - 1) - nn1, 2)
        if c == 0:
            raise CertificationError("degenerate coefficient while solving W")
        acc = rhs.coeff(j).as_const() + GQ(Fraction((j + 2) * (j + 1), 2)) * w[j + 2]
        w[j] = acc / GQ(c)
    return TPoly(w[: n + 1])


@lru_cache(maxsize=None)
def basis_pair(n: int) -> BasisPair:
    """Certified (P_n, Q_n); cached, safe for concurrent readers."""
    if n < 0:
        raise ValueError("n must be non-negative")
    lam = eigenvalue_of(n)
    if n == 0:
        P = RatFunc(TPoly.t(), TPoly.t2m1())
        Q = TowerElement.rational(RatFunc(TPoly.const(1), TPoly.t2m1()))
        pair = BasisPair(0, P, Fraction(0), None, Q)
    else:
        Ppoly = rodrigues_P(n)
        W = _solve_W(n)
        eps = epsilon(n)
        Q = ARCTANH * (TPoly.const(eps) * Ppoly) + TowerElement.rational(
            RatFunc(W, TPoly.t2m1()))
        pair = BasisPair(n, RatFunc(Ppoly), eps, W, Q)
    _certify(pair, lam)
    return pair


def _certify(pair: BasisPair, lam: Fraction) -> None:
    P_elem = TowerElement.rational(pair.P)
    if not ode_apply(P_elem, lam).is_zero():
        raise CertificationError(f"P_{pair.n} fails the ODE")
    if not ode_apply(pair.Q, lam).is_zero():
        raise CertificationError(f"Q_{pair.n} fails the ODE")
    if pair.n >= 1 and pair.P.as_tpoly().degree() != pair.n - 1:
        raise CertificationError(f"deg P_{pair.n} != n - 1")
    wr = P_elem * differentiate(pair.Q) - TowerElement.rational(pair.P.derivative()) * pair.Q
    expected = RatFunc(TPoly.const(pair.wronskian_constant), TPoly.t2m1() ** 2)
    if wr != TowerElement.rational(expected):
        raise CertificationError(f"Wronskian of (P_{pair.n}, Q_{pair.n}) is not "
                                 f"{pair.wronskian_constant}/(t^2-1)^2")


@lru_cache(maxsize=None)
def theta_pair(n: int) -> tuple[TowerElement, TowerElement]:
    """Basis of (1/2)(t^2-1) y'' = (lambda+1) y: ((t^2-1) P_n, (t^2-1) Q_n).

    This is the angular sector of the polar first-order system; for n = 0 it
    degenerates to the pair (t, 1).  The Wronskian is the constant
    wronskian_constant of the underlying pair.
    """
    pair = basis_pair(n)
    f = RatFunc(TPoly.t2m1())
    return (TowerElement.rational(pair.P * f), pair.Q * f)
