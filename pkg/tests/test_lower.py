import os
import random
import shutil
import stat
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hyperalg import sampling
from hyperalg.algebra import OCTONION, QUATERNION
from hyperalg.errors import SolverUnavailable, Undecided
from hyperalg.formula.evaluate import eval_formula
from hyperalg.formula.parser import parse, parse_term
from hyperalg.formula.rewrite import to_ordered
from hyperalg.lower import (
    RAtom,
    RealPoly,
    decide,
    emit_smt,
    find_solver,
    format_real,
    lower_assignment,
    lower_formula,
    lower_term,
    parse_realpoly,
    raise_assignment,
    run_solver,
    satisfiable,
)
from hyperalg.lower.smt import SOLVER_ENV

H = QUATERNION
x = {n: RealPoly.var(f"q_{n}") for n in range(4)}
EXTRACT = "q - i*q*i - j*q*j - k*q*k"

# A chain "(qa)b = q(ab) = (bq)a" forces ab = ba, so it is read as (aq)b, which
# makes the first conjunct say that q is central.
PHI = (
    "forall a forall b ((q*a)*b = q*(a*b) and q*(a*b) = (a*q)*b)"
    " and exists c ((forall a forall b ((c*a)*b = c*(a*b) and c*(a*b) = (a*c)*b)) and c*c = q)"
)
PHI_LITERAL = (
    "forall a forall b ((q*a)*b = q*(a*b) and q*(a*b) = (b*q)*a)"
    " and exists c ((forall a forall b ((c*a)*b = c*(a*b) and c*(a*b) = (b*c)*a)) and c*c = q)"
)


def at(x0, x1=0, x2=0, x3=0):
    return {"q_0": F(x0), "q_1": F(x1), "q_2": F(x2), "q_3": F(x3)}


def test_lower_square_plus_one():
    f = lower_formula(parse("q^2 + 1 = 0"), H)
    assert format_real(f) == "q_0^2 - q_1^2 - q_2^2 - q_3^2 + 1 = 0 and 2*q_0*q_1 = 0 and 2*q_0*q_2 = 0 and 2*q_0*q_3 = 0"


def test_lower_zero():
    assert format_real(lower_formula(parse("q = 0"), H)) == "q_0 = 0 and q_1 = 0 and q_2 = 0 and q_3 = 0"


def test_extraction_lowers_to_4x0():
    assert lower_term(parse_term(EXTRACT), H) == [4 * x[0], RealPoly(), RealPoly(), RealPoly()]


def test_empty_locus_example():
    lowered = lower_term(parse_term(f"1/16*({EXTRACT})^2 + 1"), H)
    assert lowered == [x[0] ** 2 + 1, RealPoly(), RealPoly(), RealPoly()]
    assert satisfiable(lower_formula(parse(f"1/16*({EXTRACT})^2 + 1 = 0"), H)) is False


def test_octonion_lowering_is_bilinear():
    f = lower_formula(parse("q*e1 = e1*q", OCTONION), OCTONION)
    env = {f"q_{c}": F(0) for c in range(8)}
    env["q_1"] = F(3)
    assert decide(f, env)
    env["q_2"] = F(1)
    assert not decide(f, env)


def test_central_squares_define_nonnegative_reals():
    f = lower_formula(parse(PHI), H)
    for x0 in (0, 1, 4, F(9, 4), 2):
        assert decide(f, at(x0))
    assert not decide(f, at(-1))
    assert not decide(f, at(0, 1))


def test_literal_chain_collapses_to_zero():
    f = lower_formula(parse(PHI_LITERAL), H)
    assert decide(f, at(0))
    assert not decide(f, at(1))
    assert not decide(f, at(4))


def test_decide_needs_full_assignment():
    with pytest.raises(ValueError):
        decide(lower_formula(parse("q = 1"), H), {"q_0": F(1)})


def test_satisfiable_examples():
    assert satisfiable(lower_formula(parse("q^2 + 1 = 0"), H))
    assert not satisfiable(lower_formula(parse("q = 0 and q = 1"), H))
    assert satisfiable(lower_formula(parse("q*q = 2"), H))


def test_undecided_is_raised_not_guessed():
    # a sign condition in two variables falls outside the decider's fragment
    f = lower_formula(parse("forall a (not (a*a = q))"), H)
    with pytest.raises(Undecided):
        decide(f, at(1, 1))


def test_assignment_round_trip(rng):
    env = sampling.assignment(rng, H, ["q1", "q2"])
    assert raise_assignment(lower_assignment(env, H), ["q1", "q2"], H) == env


def test_parse_realpoly():
    assert parse_realpoly("x1^2 + x2^2 - 1") == RealPoly.var("x1") ** 2 + RealPoly.var("x2") ** 2 - 1
    with pytest.raises(ValueError):
        parse_realpoly("x + i")


# -- property tests ------------------------------------------------------------------


def seeded(sig_choices=(QUATERNION, OCTONION)):
    return st.builds(lambda s, sig: (random.Random(s), sig), st.integers(0, 2**32), st.sampled_from(sig_choices))


@given(seeded())
def test_lowering_sound(data):
    rng, sig = data
    names = ["q1", "q2", "q3"]
    f = sampling.formula(rng, sig, names, depth=3)
    lowered = lower_formula(f, sig)
    for _ in range(3):
        env = sampling.assignment(rng, sig, names)
        assert decide(lowered, lower_assignment(env, sig)) == eval_formula(f, env, sig)


@settings(max_examples=30)
@given(seeded((QUATERNION,)))
def test_lowering_commutes_with_rewriter(data):
    rng, sig = data
    names = ["q1", "q2"]
    f = sampling.formula(rng, sig, names, depth=3)
    g, _ = to_ordered(f, sig)
    lf, lg = lower_formula(f, sig), lower_formula(g, sig)
    for _ in range(5):
        env = lower_assignment(sampling.assignment(rng, sig, names), sig)
        assert decide(lf, env) == decide(lg, env)


# -- SMT-LIB ---------------------------------------------------------------------------


def test_emit_smt_golden():
    script = emit_smt(lower_formula(parse("q^2 + 1 = 0"), H))
    assert script == (
        "(set-logic NRA)\n"
        "(declare-const q_0 Real)\n(declare-const q_1 Real)\n(declare-const q_2 Real)\n(declare-const q_3 Real)\n"
        "(assert (and (= (+ (* q_0 q_0) (* (- 1) q_1 q_1) (* (- 1) q_2 q_2) (* (- 1) q_3 q_3) 1) 0)"
        " (= (* 2 q_0 q_1) 0) (= (* 2 q_0 q_2) 0) (= (* 2 q_0 q_3) 0)))\n"
        "(check-sat)\n(exit)\n"
    )


def test_emit_smt_deterministic_and_algebraic_constants():
    from hyperalg.scalars import scalar_sqrt

    f = RAtom(RealPoly.var("y") * scalar_sqrt(F(2)) - F(1, 3))
    a, b = emit_smt(f), emit_smt(f)
    assert a == b
    assert "(declare-const alg_0 Real)" in a
    assert "(/ 1 3)" in a


def _fake_solver(tmp_path, body: str) -> str:
    path = tmp_path / "fake-solver"
    path.write_text(f"#!/bin/sh\n{body}\n")
    path.chmod(path.stat().st_mode | stat.S_IEXEC)
    return str(path)


def test_solver_path_precedence(tmp_path, monkeypatch):
    sat = _fake_solver(tmp_path, "echo sat")
    monkeypatch.delenv(SOLVER_ENV, raising=False)
    assert find_solver(sat) == sat
    monkeypatch.setenv(SOLVER_ENV, str(tmp_path / "missing"))
    with pytest.raises(SolverUnavailable):
        find_solver(sat)


def test_solver_timeout_is_unknown(tmp_path, monkeypatch):
    monkeypatch.delenv(SOLVER_ENV, raising=False)
    slow = _fake_solver(tmp_path, "sleep 5; echo sat")
    assert run_solver("(check-sat)\n; slow\n", slow, timeout_ms=200).status == "unknown"


@pytest.mark.skipif(shutil.which(os.environ.get(SOLVER_ENV) or "z3") is None, reason="no SMT solver installed")
@pytest.mark.parametrize(
    "text, status",
    [("q^2 + 1 = 0", "sat"), (f"1/16*({EXTRACT})^2 + 1 = 0", "unsat"), ("q = 0 and q = 1", "unsat")],
)
def test_external_solver_agrees(text, status):
    f = lower_formula(parse(text), H)
    assert run_solver(emit_smt(f), timeout_ms=20_000).status == status
    assert satisfiable(f) == (status == "sat")
