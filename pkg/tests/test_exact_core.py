"""Exact-core: scalars, parameter polynomials, rational functions, series."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from varpot import (GQ, LaurentSeries, ParamPoly, RatFunc, StructureError,
                    TPoly, UnsupportedDenominatorError, arctanh_at_infinity,
                    expand_ratfunc, partial_fractions, poly_arith)
from varpot.laurent import from_tpoly
from varpot.scalars import rational_from_str, rational_to_str


def t2m1(power=1):
    return TPoly.t2m1(power)


class TestScalars:
    def test_field_ops(self):
        a = GQ(Fraction(1, 2), Fraction(3, 4))
        b = GQ(Fraction(-2, 3), 1)
        assert (a + b) - b == a
        assert (a * b) / b == a
        assert a * GQ(1) == a
        assert (GQ(0, 1) ** 2) == GQ(-1)

    def test_serialization_round_trip(self):
        a = GQ(Fraction(-7, 3), Fraction(2, 5))
        assert GQ.from_json(a.to_json()) == a
        assert rational_to_str(Fraction(5)) == "5/1"
        assert rational_from_str("-7/3") == Fraction(-7, 3)

    def test_lowest_terms(self):
        assert rational_to_str(Fraction(2, 4)) == "1/2"


class TestParamPoly:
    def test_var_arithmetic(self):
        b = ParamPoly.var("b")
        u = ParamPoly.var("u4")
        assert (b + u) * (b - u) == b * b - u * u

    def test_mismatched_tables_error(self):
        a = ParamPoly.var("b")
        c = ParamPoly.var("u4")
        with pytest.raises(StructureError):
            poly_arith(a, c, "add")

    def test_substitute(self):
        b = ParamPoly.var("b")
        p = b ** 2 + b * 3 + 1
        assert p.substitute({"b": GQ(2)}) == ParamPoly.const(11)
        q = p.substitute({"b": ParamPoly.var("c") + 1})
        c = ParamPoly.var("c")
        assert q == c ** 2 + c * 5 + 5

    def test_coefficient_split(self):
        b = ParamPoly.var("b")
        ln2 = ParamPoly.var("ln2")
        p = b * ln2 * 2 + b - 3
        assert p.coefficient("ln2", 1) == ParamPoly.var("b") * 2
        assert p.coefficient("ln2", 0) == ParamPoly.var("b") - 3


class TestTPoly:
    def test_mul_example(self):
        # (t^2-1)(t^2-1) = t^4 - 2t^2 + 1
        assert t2m1() * t2m1() == TPoly([1, 0, -2, 0, 1])

    def test_derivative_chain(self):
        # d/dt (t^2-1)^3 = 6t (t^2-1)^2
        assert t2m1(3).derivative() == TPoly([0, 6]) * t2m1(2)

    def test_parameters_carried(self):
        b = ParamPoly.var("b")
        p = TPoly([1, b])  # 1 + b t
        q = TPoly([-1, b])
        assert p * q == TPoly([-1, ParamPoly.zero(), b * b])

    def test_division(self):
        p = t2m1(3)
        q, r = p.divmod_scalar_den(t2m1())
        assert r.is_zero() and q == t2m1(2)


class TestRatFunc:
    def test_normalization_cancels_roots(self):
        f = RatFunc(t2m1() * TPoly([0, 1]), t2m1(2))
        assert f == RatFunc(TPoly([0, 1]), t2m1())
        assert f.den == t2m1()

    def test_monic_denominator(self):
        f = RatFunc(TPoly.const(1), TPoly([0, 2]))
        assert f.den.leading().as_const() == GQ(1)

    def test_derivative(self):
        f = RatFunc(TPoly.const(1), t2m1())
        # d/dt 1/(t^2-1) = -2t/(t^2-1)^2
        assert f.derivative() == RatFunc(TPoly([0, -2]), t2m1(2))

    def test_partial_fractions_simple(self):
        # t/(t^2-1) -> (1/2)/(t-1) + (1/2)/(t+1)
        pf = partial_fractions(RatFunc(TPoly.t(), t2m1()))
        assert pf.poly.is_zero()
        assert pf.parts[(1, 1)] == ParamPoly.const(Fraction(1, 2))
        assert pf.parts[(-1, 1)] == ParamPoly.const(Fraction(1, 2))

    def test_partial_fractions_double_pole(self):
        # 1/(t^2-1)^2 -> 1/4/(t-1)^2 - 1/4/(t-1) + 1/4/(t+1)^2 + 1/4/(t+1)
        pf = partial_fractions(RatFunc(TPoly.const(1), t2m1(2)))
        quarter = ParamPoly.const(Fraction(1, 4))
        assert pf.parts[(1, 2)] == quarter
        assert pf.parts[(1, 1)] == -quarter
        assert pf.parts[(-1, 2)] == quarter
        assert pf.parts[(-1, 1)] == quarter
        assert pf.reconstruct() == RatFunc(TPoly.const(1), t2m1(2))

    def test_partial_fractions_poly_part(self):
        # (t^2+1)/t = t + 1/t
        pf = partial_fractions(RatFunc(TPoly([1, 0, 1]), TPoly([0, 1])))
        assert pf.poly == TPoly.t()
        assert pf.parts == {(0, 1): ParamPoly.const(1)}

    def test_unsupported_denominator(self):
        with pytest.raises(UnsupportedDenominatorError):
            partial_fractions(RatFunc(TPoly.const(1), TPoly([-2, 1])))

    @given(st.lists(st.integers(-3, 3), min_size=1, max_size=5),
           st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
    @settings(max_examples=60, deadline=None)
    def test_partial_fractions_recombination(self, num, a, b, c):
        den = t2m1(0)
        den = (TPoly([-1, 1]) ** a) * (TPoly([1, 1]) ** b) * (TPoly([0, 1]) ** c)
        f = RatFunc(TPoly(num), den)
        assert partial_fractions(f).reconstruct() == f


class TestLaurent:
    def test_arctanh_series(self):
        s = arctanh_at_infinity(5)
        assert s.coeff(-1) == ParamPoly.const(1)
        assert s.coeff(-3) == ParamPoly.const(Fraction(1, 3))
        assert s.coeff(-5) == ParamPoly.const(Fraction(1, 5))
        assert s.coeff(-2).is_zero()

    def test_geometric_expansions(self):
        # 1/(t^2-1) = 1/t^2 + 1/t^4 + ...
        s = expand_ratfunc(RatFunc(TPoly.const(1), t2m1()), 4)
        assert s.coeff(-2) == ParamPoly.const(1)
        assert s.coeff(-4) == ParamPoly.const(1)
        assert s.coeff(-3).is_zero()
        # t/(t^2-1) = 1/t + 1/t^3 + ...
        s2 = expand_ratfunc(RatFunc(TPoly.t(), t2m1()), 3)
        assert s2.coeff(-1) == ParamPoly.const(1)
        assert s2.coeff(-3) == ParamPoly.const(1)

    @given(st.lists(st.integers(-3, 3), min_size=1, max_size=4),
           st.lists(st.integers(-3, 3), min_size=1, max_size=4),
           st.integers(1, 2), st.integers(1, 2))
    @settings(max_examples=40, deadline=None)
    def test_product_matches_expansion(self, n1, n2, a, b):
        f = RatFunc(TPoly(n1), t2m1(a))
        g = RatFunc(TPoly(n2), t2m1(b))
        N = 6
        lhs = expand_ratfunc(f * g, N)
        rhs = expand_ratfunc(f, N + 8) * expand_ratfunc(g, N + 8)
        for e in range(-N, 3):
            assert lhs.coeff(e) == rhs.coeff(e)

    @given(st.lists(st.integers(-3, 3), min_size=1, max_size=4), st.integers(1, 2))
    @settings(max_examples=40, deadline=None)
    def test_derivative_commutes_with_expansion(self, num, a):
        f = RatFunc(TPoly(num), t2m1(a))
        N = 6
        s = expand_ratfunc(f, N + 2)
        ds = LaurentSeries({e - 1: c * e for e, c in s.terms.items()}, N)
        direct = expand_ratfunc(f.derivative(), N)
        for e in range(-N, 4):
            assert ds.coeff(e) == direct.coeff(e)
