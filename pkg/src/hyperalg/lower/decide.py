"""A small exact decider for lowered formulas.

It is not a general real-closed-field procedure. It settles the shapes that
lowering and realization produce:

* quantifier-free formulas at a full assignment, by evaluation;
* ``forall v (P_1 = 0 and ...)``: the ``P_i`` must vanish identically in
  ``v``, so each coefficient (a polynomial in the remaining variables)
  becomes an equation;
* ``exists v (...)``: equations are simplified by eliminating a variable
  that occurs linearly with a constant coefficient, by branching over the
  exact real roots of a one-variable equation, and by branching on the
  factors of a single-monomial equation; variables left free are chosen by
  a bounded deterministic witness search.

Anything else raises :class:`~hyperalg.errors.Undecided`.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import Undecided
from ..scalars import RealAlgebraic, Scalar, is_zero, isolate_real_roots
from .realpoly import RAnd, RAtom, RExists, RForall, RNot, ROr, RealFormula, RealPoly, real_free_vars

_CANDIDATES = [Fraction(n, d) for n, d in ((0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2), (3, 1), (-3, 1))]
SEARCH_TRIES = 40


def decide(f: RealFormula, env: Mapping[str, Scalar] | None = None) -> bool:
    """Truth value of ``f`` with every free variable assigned in ``env``."""
    env = dict(env or {})
    missing = [v for v in real_free_vars(f) if v not in env]
    if missing:
        raise ValueError(f"unassigned free variables: {', '.join(missing)}")
    return _holds(f, env)


def satisfiable(f: RealFormula) -> bool:
    """Truth value of the existential closure of ``f``."""
    return _exists(real_free_vars(f), [f], {})


def _conjuncts(f: RealFormula) -> list[RealFormula]:
    if isinstance(f, RAnd):
        out: list[RealFormula] = []
        for p in f.parts:
            out.extend(_conjuncts(p))
        return out
    return [f]


def _any(results: Iterable) -> bool:
    """``True`` if some thunk returns true, ``False`` if all return false."""
    unsure = None
    for thunk in results:
        try:
            if thunk():
                return True
        except Undecided as exc:
            unsure = exc
    if unsure is not None:
        raise unsure
    return False


def _holds(f: RealFormula, env: dict[str, Scalar]) -> bool:
    if isinstance(f, RAtom):
        p = f.poly.subs(env)
        if not p.is_constant():
            raise Undecided(f"unassigned variables {p.variables()}")
        return p.is_zero()
    if isinstance(f, RAnd):
        return all(_holds(p, env) for p in f.parts)
    if isinstance(f, ROr):
        return _any(lambda p=p: _holds(p, env) for p in f.parts)
    if isinstance(f, RNot):
        return not _holds(f.arg, env)
    if isinstance(f, RExists):
        return _exists(list(f.vars), [f.body], env)
    return _forall(list(f.vars), f.body, env)


# -- universal blocks ----------------------------------------------------------------


def _forall(vars: list[str], body: RealFormula, env: dict[str, Scalar]) -> bool:
    while isinstance(body, RForall):
        vars = vars + list(body.vars)
        body = body.body
    bound = set(vars)
    for part in _conjuncts(body):
        if not bound.intersection(real_free_vars(part)):
            if not _holds(part, env):
                return False
            continue
        if isinstance(part, RAtom):
            if not part.poly.subs(env).is_zero():
                return False
            continue
        if isinstance(part, RNot) and isinstance(part.arg, RAtom):
            if not _never_zero(part.arg.poly.subs(env)):
                return False
            continue
        if isinstance(part, RForall):
            if not _forall(vars, part, env):
                return False
            continue
        raise Undecided("universal block beyond polynomial identities")
    return True


def _never_zero(p: RealPoly) -> bool:
    if p.is_constant():
        return not p.is_zero()
    vs = p.variables()
    if len(vs) == 1:
        coeffs = p.univariate(vs[0])
        if all(not isinstance(c, RealAlgebraic) for c in coeffs):
            return not isolate_real_roots(coeffs)
    raise Undecided("sign condition in several variables")


# -- existential blocks --------------------------------------------------------------


def _exists(evars: list[str], parts: list[RealFormula], env: dict[str, Scalar]) -> bool:
    evars = list(evars)
    eqs: list[RealPoly] = []
    others: list[RealFormula] = []
    queue = list(parts)
    while queue:
        part = queue.pop(0)
        if isinstance(part, RAnd):
            queue = list(part.parts) + queue
        elif isinstance(part, RAtom):
            eqs.append(part.poly.subs(env))
        elif isinstance(part, RExists):
            clash = set(part.vars) & (set(evars) | set(env))
            if clash:
                raise Undecided(f"bound variable reused: {sorted(clash)}")
            evars += list(part.vars)
            queue = [part.body] + queue
        elif isinstance(part, RForall) and _identity_block(part):
            eqs.extend(_forall_equations(part, env))
        elif isinstance(part, ROr):
            rest = queue
            done = [RAtom(e) for e in eqs] + others
            return _any(
                (lambda alt=alt: _exists(evars, done + [alt] + rest, env)) for alt in part.parts
            )
        else:
            others.append(part)
    return _solve(evars, eqs, others, env, [])


def _identity_block(f: RForall) -> bool:
    body = f.body
    while isinstance(body, RForall):
        body = body.body
    return all(isinstance(p, RAtom) for p in _conjuncts(body))


def _forall_equations(f: RForall, env: dict[str, Scalar]) -> list[RealPoly]:
    vars = list(f.vars)
    body = f.body
    while isinstance(body, RForall):
        vars += list(body.vars)
        body = body.body
    out = []
    for atom in _conjuncts(body):
        p = atom.poly.subs(env)
        out.extend(c for c in p.collect(vars).values() if not c.is_zero())
    return out


def _find_linear(eqs: list[RealPoly]) -> tuple[str, RealPoly] | None:
    best = None
    for e in eqs:
        for v in e.variables():
            if e.degree(v) != 1:
                continue
            coeffs = e.collect([v])
            a = coeffs.get(((v, 1),))
            if a is None or not a.is_constant():
                continue
            rest = coeffs.get((), RealPoly())
            cand = (v, rest * (-1 / a.constant_value()))
            if best is None or len(e.terms) < best[0]:
                best = (len(e.terms), cand)
            if len(e.terms) <= 2:
                return cand
    return best[1] if best else None


def _solve(
    evars: list[str],
    eqs: list[RealPoly],
    others: list[RealFormula],
    env: dict[str, Scalar],
    subst: list[tuple[str, RealPoly]],
) -> bool:
    eqs = list(eqs)
    subst = list(subst)
    while True:
        eqs = [e for e in eqs if not e.is_zero()]
        if any(e.is_constant() for e in eqs):
            return False
        if not eqs:
            break
        lin = _find_linear(eqs)
        if lin is None:
            break
        v, expr = lin
        eqs = [e.subs({v: expr}) for e in eqs]
        subst.append((v, expr))
    free = [v for v in evars if v not in env and v not in dict(subst)]
    if not eqs:
        return _finish(free, others, env, subst)

    for e in sorted(eqs, key=lambda e: (len(e.variables()), len(e.terms))):
        vs = e.variables()
        if len(vs) == 1:
            coeffs = e.univariate(vs[0])
            if any(isinstance(c, RealAlgebraic) for c in coeffs):
                continue
            roots = isolate_real_roots(coeffs)
            return _any((lambda r=r: _assign(vs[0], r, evars, eqs, others, env, subst)) for r in roots)
        break
    for e in eqs:
        if len(e.terms) == 1:
            (mono,) = e.terms
            return _any(
                (lambda v=v: _assign(v, Fraction(0), evars, eqs, others, env, subst)) for v, _ in mono
            )
    return _search(evars, eqs, others, env, subst)


def _assign(var, value, evars, eqs, others, env, subst) -> bool:
    env2 = dict(env)
    env2[var] = value
    return _solve(evars, [e.subs({var: value}) for e in eqs], others, env2, subst)


def _finish(free: list[str], others: list[RealFormula], env: dict[str, Scalar], subst) -> bool:
    """All equations hold; pick values for ``free`` that satisfy the rest."""
    if not others:
        return True
    rng = random.Random(len(free))
    tries = [[Fraction(0)] * len(free)]
    if free:
        tries += [[rng.choice(_CANDIDATES) for _ in free] for _ in range(SEARCH_TRIES)]
    for values in tries:
        env2 = dict(env)
        env2.update(zip(free, values))
        for v, expr in reversed(subst):
            env2[v] = expr.eval(env2)
        if all(_holds(o, env2) for o in others):
            return True
        if not free:
            return False
    raise Undecided("no witness found for the remaining conditions")


def _search(evars, eqs, others, env, subst) -> bool:
    """Fix all but one variable of the smallest equation and retry."""
    e = min(eqs, key=lambda e: (len(e.variables()), len(e.terms)))
    vs = e.variables()
    rng = random.Random(len(vs))
    tries = [[Fraction(0)] * (len(vs) - 1)] + [[rng.choice(_CANDIDATES) for _ in vs[1:]] for _ in range(SEARCH_TRIES)]
    for values in tries:
        env2 = dict(env)
        env2.update(zip(vs[1:], values))
        try:
            if _solve(evars, [x.subs(dict(zip(vs[1:], values))) for x in eqs], others, env2, subst):
                return True
        except Undecided:
            pass
    raise Undecided("witness search exhausted")
