"""Exact evaluation of terms and formulas at algebra points.

Quantifier-free formulas are always evaluable. An existential block is
evaluable when it is triangular: each bound variable ``v`` has a top-level
conjunct ``v - n = 0`` (or ``n - v = 0``, up to real ±1) in which ``v``
occurs only as that lone monomial, and the definitions have no cycles.
The witness for ``v`` is then forced, so the block is true iff the body is
true at the forced witnesses.
"""

from __future__ import annotations

from typing import Mapping

from ..algebra import AlgebraElement, AlgebraSignature
from ..errors import NonTriangularQuantifier
from .ast import (
    Add,
    And,
    Const,
    Eq,
    Exists,
    Formula,
    Mul,
    Neg,
    Not,
    One,
    Or,
    Term,
    Var,
    Zero,
    term_vars,
)
from .normal import expand_difference, monos_term

Assignment = Mapping[str, AlgebraElement]


def eval_term(t: Term, env: Assignment, sig: AlgebraSignature) -> AlgebraElement:
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise KeyError(f"no value for variable {t.name!r}") from None
    if isinstance(t, Const):
        return t.value
    if isinstance(t, Zero):
        return sig.zero()
    if isinstance(t, One):
        return sig.one()
    if isinstance(t, Neg):
        return -eval_term(t.arg, env, sig)
    if isinstance(t, Add):
        return eval_term(t.left, env, sig) + eval_term(t.right, env, sig)
    if isinstance(t, Mul):
        return eval_term(t.left, env, sig) * eval_term(t.right, env, sig)
    raise TypeError(f"not a term: {t!r}")


def _conjuncts(f: Formula) -> list[Formula]:
    if isinstance(f, And):
        return _conjuncts(f.left) + _conjuncts(f.right)
    return [f]


def _definition(monos: list, var: str, sig: AlgebraSignature) -> Term | None:
    """Term ``n`` with ``var = n`` forced by the expanded atom ``monos``, or ``None``."""
    lone = [(c, tree) for c, tree in monos if tree == Var(var)]
    if len(lone) != 1 or lone[0][0] not in (1, -1):
        return None
    rest = [(c, tree) for c, tree in monos if tree != Var(var)]
    if any(var in term_vars(tree) for _, tree in rest if tree is not None):
        return None
    c = lone[0][0]
    # c*var + rest = 0  =>  var = -c * rest
    return monos_term([(-c * rc, tree) for rc, tree in rest], sig)


_PLANS: dict[int, tuple] = {}


def _plan(block: tuple[str, ...], body: Formula, sig: AlgebraSignature) -> list[tuple[str, Term]]:
    """Definitions ``(v, n)`` of the block's variables in dependency order.

    Cached by the identity of ``body`` since formulas are evaluated at many points.
    """
    hit = _PLANS.get(id(body))
    if hit is not None and hit[0] is body and hit[1] == block and hit[2] is sig:
        return hit[3]
    defs: dict[str, Term] = {}
    used: set[int] = set()
    parts = _conjuncts(body)
    mentions = [set(term_vars(p.lhs)) | set(term_vars(p.rhs)) if isinstance(p, Eq) else set() for p in parts]
    expanded: dict[int, list] = {}
    for v in block:
        for idx, part in enumerate(parts):
            if idx in used or v not in mentions[idx]:
                continue
            if idx not in expanded:
                expanded[idx] = expand_difference(part.lhs, part.rhs, sig)
            rhs = _definition(expanded[idx], v, sig)
            if rhs is not None:
                defs[v] = rhs
                used.add(idx)
                break
        else:
            raise NonTriangularQuantifier(f"no defining equation for bound variable {v!r}")
    order: list[tuple[str, Term]] = []
    known: set[str] = set()
    pending = list(block)
    while pending:
        ready = [v for v in pending if all(w in known or w not in block for w in term_vars(defs[v]))]
        if not ready:
            raise NonTriangularQuantifier(f"cyclic definitions among {pending}")
        for v in ready:
            order.append((v, defs[v]))
            known.add(v)
            pending.remove(v)
    if len(_PLANS) > 512:
        _PLANS.clear()
    _PLANS[id(body)] = (body, block, sig, order)
    return order


def triangular_definitions(block: list[str], body: Formula, sig: AlgebraSignature) -> list[tuple[str, Term]]:
    """Defining terms of the block's variables, each using only earlier ones."""
    return list(_plan(tuple(block), body, sig))


def triangular_witnesses(
    block: list[str], body: Formula, env: Assignment, sig: AlgebraSignature
) -> dict[str, AlgebraElement]:
    """Forced values of the block's variables, computed in dependency order."""
    values = {k: v for k, v in env.items() if k not in block}
    for v, rhs in _plan(tuple(block), body, sig):
        values[v] = eval_term(rhs, values, sig)
    return {v: values[v] for v in block}


def eval_formula(f: Formula, env: Assignment, sig: AlgebraSignature) -> bool:
    """Truth value of ``f`` at ``env``; see the module docstring for quantifiers."""
    if isinstance(f, Eq):
        return (eval_term(f.lhs, env, sig) - eval_term(f.rhs, env, sig)).is_zero()
    if isinstance(f, And):
        return eval_formula(f.left, env, sig) and eval_formula(f.right, env, sig)
    if isinstance(f, Or):
        return eval_formula(f.left, env, sig) or eval_formula(f.right, env, sig)
    if isinstance(f, Not):
        return not eval_formula(f.arg, env, sig)
    if isinstance(f, Exists):
        block = []
        body: Formula = f
        while isinstance(body, Exists):
            block.append(body.var)
            body = body.body
        witnesses = triangular_witnesses(block, body, env, sig)
        return eval_formula(body, {**env, **witnesses}, sig)
    raise NonTriangularQuantifier("universal quantifiers cannot be evaluated at a point")
