import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hyperalg import sampling
from hyperalg.algebra import OCTONION, QUATERNION, norm, parse_element
from hyperalg.errors import ArityMismatch, ZeroPolynomial
from hyperalg.opoly import (
    OrderedPoly,
    companion,
    conj_poly,
    conv_mul,
    format_opoly,
    op_eval,
    parse_opoly,
    reduce_mod_sphere,
)

from oracles import float_quat_poly

H = QUATERNION
i, j, k = (H.unit(n) for n in (1, 2, 3))


def P(text, sig=H, names=None):
    return parse_opoly(text, sig, names)


def test_eval_examples():
    assert op_eval(P("q^2 + 1"), i).is_zero()
    assert op_eval(P("q^2 + 1"), H.one()) == H.scalar(2)
    assert op_eval(P("q1*q2"), [i, j]) == k


def test_eval_arity():
    with pytest.raises(ArityMismatch):
        op_eval(P("q1*q2"), [i])


def test_conv_mul_examples():
    assert conv_mul(P("q - i"), P("q - j")) == P("q^2 - q*(i + j) + k")
    p = P("q^3*(1 + j) - 2")
    assert conv_mul(p, OrderedPoly.constant(H, 1)) == p
    assert conv_mul(P("q - i"), P("q + i")) == P("q^2 + 1")


def test_companion_examples():
    assert companion(P("q - i")) == [1, 0, 1]
    assert companion(P("q^2 + 1")) == [1, 0, 2, 0, 1]
    a = parse_element("1 + 2i - j")
    assert companion(OrderedPoly.constant(H, a)) == [norm(a)]
    with pytest.raises(ZeroPolynomial):
        companion(OrderedPoly.from_dict(H, ["q"], {}))


def test_reduce_mod_sphere_examples():
    assert reduce_mod_sphere(P("q^2 + 1"), 0, 1) == (H.zero(), H.zero())
    assert reduce_mod_sphere(P("q - i"), 0, 1) == (H.one(), -i)
    b, a = reduce_mod_sphere(P("q^2 - q*(i + j) + k"), 0, 1)
    assert b == -(i + j) and a == k - H.one()


def test_print_grlex():
    assert format_opoly(P("1 + q2 + q1^2*q2*(1 + 2i)")) == "q1^2*q2*(1 + 2i) + q2 + 1"
    assert format_opoly(P("q1*q2 - q1^2", names=["q1", "q2"])) == "-q1^2 + q1*q2"


def test_pointwise_product_fails_off_center():
    p, r = P("q - i"), P("q - j")
    q = j
    assert op_eval(conv_mul(p, r), q) != op_eval(p, q) * op_eval(r, q)


def test_float_oracle_agrees(rng):
    for _ in range(30):
        p = sampling.univariate(rng, H, 5)
        q = sampling.element(rng, H, 3, 3)
        exact = op_eval(p, q)
        approx = float_quat_poly([np.array([float(c) for c in a.coords]) for a in p.coeffs()],
                                 np.array([float(c) for c in q.coords]))
        assert np.allclose([float(c) for c in exact.coords], approx, rtol=1e-9, atol=1e-9)


def seeded(fn):
    return st.integers(0, 2**32).map(lambda s: fn(random.Random(s)))


polys = st.sampled_from([H, OCTONION]).flatmap(lambda sig: seeded(lambda r: sampling.univariate(r, sig, 4)))


@given(polys, st.fractions(-5, 5, max_denominator=6))
def test_central_eval_is_multiplicative(p, t):
    r = P("q^2 - 3*q + 1", p.sig) if p.sig == H else parse_opoly("q^2*e3 + e1", p.sig)
    q = p.sig.scalar(t)
    assert op_eval(conv_mul(p, r), q) == op_eval(p, q) * op_eval(r, q)


@given(polys, st.fractions(-5, 5, max_denominator=6))
def test_companion_is_norm_at_center(p, t):
    c = companion(p)
    value = sum(coef * t**h for h, coef in enumerate(c))
    assert value == norm(op_eval(p, p.sig.scalar(t)))


@given(seeded(lambda r: (sampling.element(r, H, 3, 2), sampling.univariate(r, H, 3))))
def test_left_root_preserved(data):
    root, r = data
    p = OrderedPoly.univariate(H, [-root, H.one()])
    assert op_eval(p, root).is_zero()
    assert op_eval(conv_mul(p, r), root).is_zero()


@given(polys, seeded(lambda r: [sampling.unit_sphere_point(r, QUATERNION) for _ in range(3)]))
def test_reduce_mod_sphere_consistent(p, dirs):
    if p.sig != H:
        return
    x, y = F(1, 2), F(3, 2)
    b, a = reduce_mod_sphere(p, x, y)
    for u in dirs:
        q = H.scalar(x) + u.scale(y)
        assert op_eval(p, q) == q * b + a


@given(polys)
def test_conj_is_involution(p):
    assert conj_poly(conj_poly(p)) == p


@given(polys, polys)
def test_degree_additive(p, r):
    if p.sig != r.sig:
        return
    assert conv_mul(p, r).degree() == p.degree() + r.degree()


@given(polys)
def test_text_round_trip(p):
    assert parse_opoly(format_opoly(p), p.sig) == p
