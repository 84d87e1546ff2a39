from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from salvetti.laurent import (
    InexactDivisionError,
    LaurentPoly,
    exact_divide,
    laurent_gcd,
    parse_laurent,
    q_binomial,
    q_factorial,
    q_integer,
    render,
)

coeff = st.integers(-6, 6)
polys = st.builds(LaurentPoly, st.lists(coeff, max_size=6), st.integers(-4, 4))
nonzero = polys.filter(lambda p: not p.is_zero())


def test_render_examples():
    assert render(parse_laurent("q^-1 + 2 + q")) == "q^-1 + 2 + q"
    assert str(LaurentPoly([1, 1, 1])) == "1 + q + q^2"
    assert str(LaurentPoly([0, -1], 0)) == "-q"
    assert str(LaurentPoly([Fraction(1, 2)], 1)) == "(1/2)q"
    assert str(LaurentPoly()) == "0"
    assert str(LaurentPoly([3, 0, -2], -2)) == "3q^-2 - 2"


def test_trimmed_storage():
    p = LaurentPoly([0, 0, 1, 0], -1)
    assert p.low == 1 and p.high == 1 and p.coeffs == (1,)
    assert p == LaurentPoly.q()


def test_monomial_units_and_inverse():
    q = LaurentPoly.q()
    assert (q ** -3) * (q ** 3) == 1
    assert LaurentPoly.monomial(Fraction(2, 3), -1).is_unit()
    assert not q_integer(2).is_unit()
    with pytest.raises(Exception):
        q_integer(2) ** -1


@given(polys, polys, st.integers(-3, 3).filter(bool))
def test_evaluation_is_a_ring_homomorphism(a, b, x):
    assert (a + b)(x) == a(x) + b(x)
    assert (a * b)(x) == a(x) * b(x)
    assert (a - b)(x) == a(x) - b(x)


@given(polys, nonzero)
def test_euclidean_division(a, b):
    quot, rem = divmod(a, b)
    assert quot * b + rem == a
    assert rem.is_zero() or rem.span < b.span


@given(polys, nonzero)
def test_exact_divide_recovers_factor(a, b):
    assert exact_divide(a * b, b) == a


@settings(max_examples=60)
@given(nonzero, nonzero, nonzero)
def test_gcd_divides_and_is_monic(a, b, c):
    g = laurent_gcd(a * c, b * c)
    assert g.low == 0 and g.coeffs[-1] == 1
    assert divmod(a * c, g)[1].is_zero() and divmod(b * c, g)[1].is_zero()
    assert divmod(g, c.normalized())[1].is_zero()


@given(polys)
def test_render_parse_round_trip(p):
    assert parse_laurent(render(p)) == p


def test_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        exact_divide(q_integer(5), q_integer(2))


def test_q_integers():
    assert q_integer(1) == 1
    assert q_factorial(0) == 1
    assert q_factorial(3) == q_integer(2) * q_integer(3)
    assert q_binomial(4, 2) == parse_laurent("1 + q + 2q^2 + q^3 + q^4")
    for k in range(7):
        for h in range(k + 1):
            assert q_binomial(k, h)(1) == comb(k, h)
    with pytest.raises(ValueError):
        q_integer(0)
