from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from hyperalg.errors import DivisionByZero, ZeroPolynomial
from hyperalg.scalars import (
    RealAlgebraic,
    count_real_roots,
    format_scalar,
    isolate_real_roots,
    parse_scalar,
    poly_sign_at,
    scalar_arith,
    scalar_compare,
    scalar_sign,
    scalar_sqrt,
)

from oracles import bisection_root_count, sylvester_resultant

SQRT2 = scalar_sqrt(F(2))
SQRT3 = scalar_sqrt(F(3))


def test_isolate_sqrt2():
    lo, hi = isolate_real_roots([-2, 0, 1])
    assert isinstance(lo, RealAlgebraic) and isinstance(hi, RealAlgebraic)
    assert lo.poly == hi.poly == (-2, 0, 1)
    assert lo.hi <= hi.lo
    assert scalar_compare(lo, -hi) == 0


def test_isolate_no_real_roots():
    assert isolate_real_roots([1, 0, 1]) == []


def test_isolate_rational_roots_are_fractions():
    roots = isolate_real_roots([0, -1, 0, 1])
    assert roots == [-1, 0, 1]
    assert all(type(r) is F for r in roots)


def test_isolate_zero_poly():
    with pytest.raises(ZeroPolynomial):
        isolate_real_roots([0, 0])


def test_additive_inverse_is_rational_zero():
    z = scalar_arith("add", SQRT2, -SQRT2)
    assert z == 0 and type(z) is F


def test_sqrt2_squared():
    two = scalar_arith("mul", SQRT2, SQRT2)
    assert two == 2 and type(two) is F


def test_rational_division():
    assert scalar_arith("div", 1, 2) == F(1, 2)
    with pytest.raises(DivisionByZero):
        scalar_arith("/", SQRT2, 0)


def test_compare_examples():
    assert scalar_compare(SQRT2, F(141, 100)) == 1
    assert scalar_compare(F(1, 3), F(1, 3)) == 0
    assert scalar_compare(-SQRT2, 0) == -1


def test_sum_of_roots_minpoly_matches_resultant():
    # sqrt2 + sqrt3 is a root of Res_y(y^2 - 2, (x - y)^2 - 3) = x^4 - 10x^2 + 1
    s = SQRT2 + SQRT3
    assert isinstance(s, RealAlgebraic)
    for x in (F(0), F(1), F(3), F(-7, 2)):
        g = [x * x - 3, -2 * x, 1]  # (x - y)^2 - 3 in y
        expected = x**4 - 10 * x**2 + 1
        assert sylvester_resultant([-2, 0, 1], g) == expected
    assert poly_sign_at([1, 0, -10, 0, 1], s) == 0


def test_text_round_trip():
    for x in (F(-3, 7), SQRT2, -SQRT3, SQRT2 + SQRT3):
        text = format_scalar(x)
        assert scalar_compare(parse_scalar(text), x) == 0
        assert format_scalar(parse_scalar(text)) == text


def test_alg_literal_rejects_bad_interval():
    with pytest.raises(ValueError):
        parse_scalar("alg([-2, 0, 1], -2, 2)")


def test_rational_result_normalised():
    half_sqrt2 = SQRT2 / 2
    assert scalar_arith("*", half_sqrt2, SQRT2) == 1
    assert type(scalar_arith("*", half_sqrt2, SQRT2)) is F


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
pool = [SQRT2, -SQRT2, SQRT3, SQRT2 + SQRT3, scalar_sqrt(F(5, 3))]
scalars = st.one_of(rationals, st.sampled_from(pool))


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * (1 / a) == 1


@given(scalars, scalars, scalars)
def test_order_compatible(a, b, c):
    if scalar_compare(a, b) < 0:
        assert scalar_compare(a + c, b + c) < 0
        if scalar_sign(c) > 0:
            assert scalar_compare(a * c, b * c) < 0


@given(st.sampled_from(pool))
def test_minpoly_vanishes(x):
    acc = F(0)
    for coef in reversed(x.poly):
        acc = acc * x + coef
    assert acc == 0


@given(st.fractions(min_value=0, max_value=100, max_denominator=30))
def test_sqrt_squares_back(s):
    r = scalar_sqrt(s)
    assert r * r == s
    assert scalar_sign(r) >= 0


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=7))
def test_sturm_count_matches_bisection(p):
    if p[-1] == 0:
        p[-1] = 1
    assert count_real_roots(p) == bisection_root_count(p)
