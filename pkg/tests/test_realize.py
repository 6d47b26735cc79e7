import os
import random
import shutil
from fractions import Fraction as F

import pytest

from hyperalg.algebra import OCTONION, QUATERNION
from hyperalg.formula.ast import Eq, Zero, conjunction
from hyperalg.lower import RealPoly, emit_smt, lower_formula, realize, run_solver
from hyperalg.lower.smt import SOLVER_ENV
from hyperalg.opoly import to_term

H = QUATERNION
x1, x2 = RealPoly.var("x1"), RealPoly.var("x2")
CIRCLE = [x1**2 + x2**2 - 1]
ON_CIRCLE = [(1, 0), (0, 1), (F(3, 5), F(4, 5)), (F(-4, 5), F(3, 5))]
HAS_SOLVER = shutil.which(os.environ.get(SOLVER_ENV) or "z3") is not None


def test_circle_round_trip():
    r = realize(CIRCLE, ["x1", "x2"], H)
    assert r.proj_arity == 1 and r.alg_vars == ["q1"]
    for pt in ON_CIRCLE:
        y = r.forward(pt)
        assert r.member(y)
        assert r.project(y) == [F(c) for c in pt]


def test_points_off_the_set_do_not_lift():
    r = realize(CIRCLE, ["x1", "x2"], H)
    rng = random.Random(3)
    for _ in range(20):
        pt = (F(rng.randint(-9, 9), rng.randint(1, 5)), F(rng.randint(-9, 9), rng.randint(1, 5)))
        assert r.member(r.forward(pt)) == (pt[0] ** 2 + pt[1] ** 2 == 1)


def test_whole_space():
    r = realize([RealPoly()], ["x1", "x2"], H)
    assert all(r.member(r.forward(p)) for p in [(2, 7), (0, 0), (F(-1, 3), 5)])


def test_padding_is_enforced():
    r = realize([RealPoly()], ["x1", "x2"], H)
    y = r.forward((1, 1))
    y[0] = y[0] + H.unit(3)
    assert not r.member(y)


@pytest.mark.skipif(not HAS_SOLVER, reason="no SMT solver installed")
def test_empty_set_target_is_unsat():
    r = realize([x1**2 + 1], ["x1"], H)
    f = lower_formula(conjunction([Eq(to_term(p), Zero()) for p in r.target]), H)
    assert run_solver(emit_smt(f), timeout_ms=60_000).status == "unsat"


def test_sum_of_squares_mode():
    r = realize(CIRCLE, ["x1", "x2"], H, mode="sos")
    assert len(r.target) > 0
    y = r.forward((F(3, 5), F(4, 5)))
    assert r.member(y) and r.project(y) == [F(3, 5), F(4, 5)]


def test_octonion_circle():
    r = realize(CIRCLE, ["x1", "x2"], OCTONION)
    for pt in ON_CIRCLE[2:]:
        y = r.forward(pt)
        assert r.member(y) and r.project(y) == list(pt)
    assert not r.member(r.forward((1, 1)))


def test_many_real_variables_need_several_algebra_variables():
    xs = [RealPoly.var(f"x{n}") for n in range(1, 6)]
    r = realize([xs[0] - xs[4]], [f"x{n}" for n in range(1, 6)], H)
    assert r.alg_vars == ["q1", "q2"]
    assert r.member(r.forward((2, 0, 0, 0, 2)))
    assert not r.member(r.forward((2, 0, 0, 0, 1)))


def test_report_and_errors():
    rep = realize(CIRCLE, ["x1", "x2"], H).report()
    assert set(rep) == {"signature", "mode", "real_variables", "variables", "proj_arity", "target", "forward_map"}
    assert rep["signature"] == "quaternion" and rep["real_variables"] == ["x1", "x2"]
    with pytest.raises(ValueError):
        realize([], ["x1"], H)
    with pytest.raises(ValueError):
        realize(CIRCLE, ["x1"], H)
    with pytest.raises(ValueError):
        realize(CIRCLE, mode="bogus")
