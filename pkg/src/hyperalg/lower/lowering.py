"""Lowering of algebra terms and formulas to real polynomial formulas.

Each algebra variable ``q`` becomes ``k = sig.dim`` real variables
``q_0, ..., q_{k-1}`` (its coordinates). A product lowers through the
structure constants, ``(ab)_l = sum_{i,j} table[i][j][l] a_i b_j``, an
equation to the conjunction of its ``k`` coordinate equations and a
quantifier to a block of ``k`` real quantifiers.
"""

from __future__ import annotations

from typing import Mapping

from ..algebra import AlgebraElement, AlgebraSignature
from ..formula.ast import Add, And, Const, Eq, Exists, Forall, Formula, Mul, Neg, Not, One, Or, Term, Var, Zero
from ..scalars import Scalar
from .realpoly import RAtom, RExists, RForall, RNot, RealFormula, RealPoly, r_and, r_or


def coord_name(var: str, c: int) -> str:
    """Name of the ``c``-th real coordinate of algebra variable ``var``."""
    return f"{var}_{c}"


def coord_names(var: str, sig: AlgebraSignature) -> tuple[str, ...]:
    return tuple(coord_name(var, c) for c in range(sig.dim))


def lower_term(t: Term, sig: AlgebraSignature) -> list[RealPoly]:
    """Coordinate polynomials of a term."""
    k = sig.dim
    if isinstance(t, Var):
        return [RealPoly.var(n) for n in coord_names(t.name, sig)]
    if isinstance(t, Const):
        return [RealPoly.const(c) for c in t.value.coords]
    if isinstance(t, Zero):
        return [RealPoly()] * k
    if isinstance(t, One):
        return [RealPoly.const(1)] + [RealPoly()] * (k - 1)
    if isinstance(t, Neg):
        return [-p for p in lower_term(t.arg, sig)]
    if isinstance(t, Add):
        return [a + b for a, b in zip(lower_term(t.left, sig), lower_term(t.right, sig))]
    if isinstance(t, Mul):
        a, b = lower_term(t.left, sig), lower_term(t.right, sig)
        out = [RealPoly()] * k
        products: dict[tuple[int, int], RealPoly] = {}
        for i, j, l, c in sig._sparse:
            if a[i].is_zero() or b[j].is_zero():
                continue
            if (i, j) not in products:
                products[(i, j)] = a[i] * b[j]
            out[l] = out[l] + products[(i, j)] * c
        return out
    raise TypeError(f"not a term: {t!r}")


def lower_equation(lhs: Term, rhs: Term, sig: AlgebraSignature) -> RealFormula:
    """Conjunction of the nonzero coordinate equations of ``lhs - rhs = 0``."""
    diff = lower_term(Add(lhs, Neg(rhs)), sig)
    return r_and(RAtom(p) for p in diff if not p.is_zero())


def lower_formula(f: Formula, sig: AlgebraSignature) -> RealFormula:
    if isinstance(f, Eq):
        return lower_equation(f.lhs, f.rhs, sig)
    if isinstance(f, And):
        return r_and([lower_formula(f.left, sig), lower_formula(f.right, sig)])
    if isinstance(f, Or):
        return r_or([lower_formula(f.left, sig), lower_formula(f.right, sig)])
    if isinstance(f, Not):
        return RNot(lower_formula(f.arg, sig))
    if isinstance(f, (Exists, Forall)):
        block = [f.var]
        body = f.body
        while isinstance(body, type(f)):
            block.append(body.var)
            body = body.body
        names = tuple(n for v in block for n in coord_names(v, sig))
        inner = lower_formula(body, sig)
        return RExists(names, inner) if isinstance(f, Exists) else RForall(names, inner)
    raise TypeError(f"not a formula: {f!r}")


def lower_assignment(env: Mapping[str, AlgebraElement], sig: AlgebraSignature) -> dict[str, Scalar]:
    """Real coordinates of an algebra assignment."""
    out: dict[str, Scalar] = {}
    for var, value in env.items():
        for c, x in enumerate(value.coords):
            out[coord_name(var, c)] = x
    return out


def raise_assignment(env: Mapping[str, Scalar], vars: list[str], sig: AlgebraSignature) -> dict[str, AlgebraElement]:
    """Inverse of :func:`lower_assignment` for the listed algebra variables."""
    return {v: sig.element([env[n] for n in coord_names(v, sig)]) for v in vars}
