"""Scalar tower: fields, polynomials, rational functions, causality."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sminf import (
    GF,
    QQ,
    IMPROPER,
    STRICTLY_PROPER,
    UNIT,
    ZERO,
    ParseError,
    Poly,
    RatFun,
    at_zero,
    causality_class,
    delta,
    pi_split,
    poly_gcd,
    ratfun_normalize,
)

from conftest import p, rf

GF101 = GF(101)


class TestFields:
    def test_gf_requires_prime(self):
        with pytest.raises(ParseError):
            GF(100)
        with pytest.raises(ParseError):
            GF(2**31 + 11)

    def test_gf_arithmetic(self):
        F = GF(7)
        assert F.add(5, 4) == 2
        assert F.mul(3, 5) == 1
        assert F.inv(3) == 5
        assert F.from_int(-1) == 6
        assert F.parse("3/5") == F.div(3, 5) == 3 * F.inv(5) % 7

    def test_rational_parse_format(self):
        assert QQ.parse("-7/2") == Fraction(-7, 2)
        assert QQ.format(Fraction(1, 3)) == "1/3"
        with pytest.raises(ParseError):
            QQ.parse("1/0")

    def test_field_equality(self):
        assert GF(101) == GF(101)
        assert GF(101) != GF(103)
        assert QQ != GF(101)


class TestPoly:
    def test_trailing_zeros_trimmed(self, field):
        assert p(field, 1, 2, 0, 0) == p(field, 1, 2)
        assert p(field, 0, 0).is_zero

    def test_degree_sentinel(self, field):
        assert p(field).degree == -math.inf
        assert p(field, 3).degree == 0
        assert p(field, 0, 0, 1).degree == 2

    def test_divmod_reassembles(self, field):
        a = p(field, 1, 0, 2, 1)
        b = p(field, 1, 1)
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_gcd_examples(self, field):
        a = p(field, -1, 0, 1)  # s^2 - 1
        b = p(field, -1, 1)  # s - 1
        assert poly_gcd(a, b) == p(field, -1, 1)
        assert poly_gcd(p(field), p(field)).is_zero

    def test_shift_down(self, field):
        assert p(field, 1, 2, 3).shift_down(1) == p(field, 2, 3)
        assert p(field, 1).shift_down(2).is_zero


class TestNormalize:
    def test_common_factor_cancels(self, field):
        f = ratfun_normalize(p(field, -1, 0, 1), p(field, -1, 1))
        assert f == rf(field, (1, 1))  # s + 1

    def test_zero_case(self, field):
        f = ratfun_normalize(p(field), p(field, 0, 1))
        assert f.num.is_zero and f.den == p(field, 1)

    def test_monic_rescale(self):
        # 2s / 4 reduces to s/2 with monic denominator
        f = ratfun_normalize(p(QQ, 0, 2), p(QQ, 4))
        assert f.num == Poly(QQ, (Fraction(0), Fraction(1, 2)))
        assert f.den == p(QQ, 1)

    def test_zero_denominator_rejected(self, field):
        with pytest.raises(ZeroDivisionError):
            ratfun_normalize(p(field, 1), p(field))


class TestDelta:
    def test_examples(self, field):
        assert delta(rf(field, (1,), (0, 1))) == 1  # 1/s
        assert delta(rf(field, (0, 1))) == -1  # s
        assert delta(rf(field, (1, 1), (1, 0, 1))) == 1  # (s+1)/(s^2+1)
        assert delta(rf(field, ())) == math.inf


class TestPiSplit:
    def test_cubic_over_s(self, field):
        plus, minus = pi_split(rf(field, (1, 0, 0, 1), (0, 1)))
        assert plus == p(field, 0, 0, 1)
        assert minus == rf(field, (1,), (0, 1))

    def test_linear_over_s(self, field):
        plus, minus = pi_split(rf(field, (1, 1), (0, 1)))
        assert plus == p(field, 1)
        assert minus == rf(field, (1,), (0, 1))

    def test_strictly_proper_fixed(self, field):
        f = rf(field, (1, 2), (1, 1, 1))
        plus, minus = pi_split(f)
        assert plus.is_zero and minus == f


class TestAtZero:
    def test_division_case(self, field):
        assert at_zero(rf(field, (3, 2, 1), (0, 1))) == field.from_int(2)

    def test_strictly_proper(self, field):
        assert at_zero(rf(field, (1,), (2, 1))) == field.zero

    def test_constant(self, field):
        assert at_zero(rf(field, (5,))) == field.from_int(5)


class TestCausality:
    def test_examples(self, field):
        assert causality_class(rf(field, (0, 1))) == IMPROPER
        assert causality_class(rf(field, (1, 1), (2, 1))) == UNIT
        assert causality_class(rf(field, (1,), (0, 1))) == STRICTLY_PROPER
        assert causality_class(rf(field, ())) == ZERO


# -- property tests ------------------------------------------------------------


@st.composite
def field_and_ratfuns(draw, count=1):
    field = draw(st.sampled_from([QQ, GF101]))
    if field is QQ:
        scalars = st.integers(-4, 4).map(Fraction)
    else:
        scalars = st.integers(0, 100)
    def one():
        num = Poly(field, draw(st.lists(scalars, max_size=4)))
        den = Poly(field, draw(st.lists(scalars, min_size=1, max_size=4)))
        if den.is_zero:
            den = Poly.one(field)
        return RatFun(num, den)
    return field, tuple(one() for _ in range(count))


@settings(max_examples=80, deadline=None)
@given(field_and_ratfuns())
def test_pi_split_reassembles(data):
    _, (f,) = data
    plus, minus = f.pi_split()
    assert RatFun.from_poly(plus) + minus == f
    assert minus.is_zero or minus.is_strictly_proper


@settings(max_examples=80, deadline=None)
@given(field_and_ratfuns(count=2))
def test_delta_is_a_valuation(data):
    _, (f, g) = data
    prod = f * g
    if not (f.is_zero or g.is_zero):
        assert prod.delta == f.delta + g.delta
    assert (f + g).delta >= min(f.delta, g.delta)


@settings(max_examples=80, deadline=None)
@given(field_and_ratfuns(count=2), st.integers(-3, 3), st.integers(-3, 3))
def test_at_zero_is_linear(data, a, b):
    field, (f, g) = data
    ca, cb = field.from_int(a), field.from_int(b)
    lhs = (f.scale(ca) + g.scale(cb)).at_zero()
    rhs = field.add(field.mul(ca, f.at_zero()), field.mul(cb, g.at_zero()))
    assert lhs == rhs


@settings(max_examples=80, deadline=None)
@given(field_and_ratfuns())
def test_unit_iff_proper_inverse(data):
    _, (f,) = data
    if f.is_zero:
        return
    assert (f.causality_class() == UNIT) == (f.is_proper and f.inverse().is_proper)
