import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hyperalg import sampling
from hyperalg.algebra import OCTONION, QUATERNION
from hyperalg.errors import ConstantPolynomial, ZeroPolynomial
from hyperalg.opoly import OrderedPoly, conv_mul, op_eval, parse_opoly, reduce_mod_sphere
from hyperalg.roots import Isolated, Sphere, certify_zero, root_report, solve, zero_locus_dimension

from oracles import companion_root_clusters

H = QUATERNION
i, j, k = (H.unit(n) for n in (1, 2, 3))


def test_sphere_for_q2_plus_1():
    rs = solve(parse_opoly("q^2 + 1"))
    assert rs.descriptors == [Sphere(0, 1)]
    assert zero_locus_dimension(rs) == 2
    assert root_report(rs) == {"input": "q^2 + 1", "roots": [{"type": "sphere", "x": "0", "y": "1"}], "dimension": 2}


def test_single_isolated_root():
    p = parse_opoly("q^2 - q*(i + j) + k")
    rs = solve(p)
    assert rs.descriptors == [Isolated(i)]
    assert not op_eval(p, j).is_zero()
    assert not rs.contains(j)


def test_real_roots():
    rs = solve(parse_opoly("q^2 - 1"))
    assert sorted(d.point.coords[0] for d in rs.descriptors) == [-1, 1]
    assert zero_locus_dimension(solve(parse_opoly("q - 1"))) == 0


def test_octonion_sphere_dimension():
    assert zero_locus_dimension(solve(parse_opoly("q^2 + 1", OCTONION))) == 6


def test_constant_rejected():
    with pytest.raises(ZeroPolynomial):
        solve(OrderedPoly.from_dict(H, ["q"], {}))
    with pytest.raises(ConstantPolynomial):
        solve(OrderedPoly.constant(H, 3))


def test_irrational_isolated_root_is_certified():
    # roots of q^2 - 2 + i lie off the rational lattice
    p = parse_opoly("q^2 - 2 + i")
    rs = solve(p)
    assert len(rs.points()) == 2
    for r in rs.points():
        assert certify_zero(p, r)


def check_sound(p, rs):
    assert len(rs) > 0
    for d in rs.descriptors:
        if isinstance(d, Sphere):
            assert d.y > 0
            b, a = reduce_mod_sphere(p, d.x, d.y)
            assert b.is_zero() and a.is_zero()
        else:
            pt = d.point
            if all(isinstance(c, Fraction) for c in pt.coords):
                assert op_eval(p, pt).is_zero()
            else:
                assert certify_zero(p, pt)


@settings(max_examples=25)
@given(st.integers(0, 2**32), st.sampled_from([QUATERNION, OCTONION]))
def test_solve_sound_and_nonempty(seed, sig):
    p = sampling.univariate(random.Random(seed), sig, 3)
    check_sound(p, solve(p))


@settings(max_examples=25)
@given(st.integers(0, 2**32))
def test_factor_root_preserved(seed):
    rng = random.Random(seed)
    root = sampling.element(rng, H, 3, 2)
    p = OrderedPoly.univariate(H, [-root, H.one()])
    top = sampling.element(rng, H, 3, 1)
    r = OrderedPoly.univariate(H, [sampling.element(rng, H, 3, 2), H.one() if top.is_zero() else top])
    assert solve(conv_mul(p, r)).contains(root)


def test_counts_match_numeric_oracle():
    rng = random.Random(11)
    for _ in range(30):
        p = sampling.univariate(rng, H, 4)
        rs = solve(p)
        coeffs = [np.array([float(c) for c in a.coords]) for a in p.coeffs()]
        classes, residual = companion_root_clusters(coeffs)
        assert residual < 1e-9
        assert classes == len(rs)
