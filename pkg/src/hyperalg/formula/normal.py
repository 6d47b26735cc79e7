"""Expansion of terms into monomials and the ordered-monomial predicate.

A monomial is ``(coef, tree)``: ``coef`` is a nonzero real scalar and
``tree`` is ``None`` (the constant 1) or a product tree whose leaves are
variables and non-real constants. Real constants are central, so they are
always pulled into ``coef``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from ..algebra import AlgebraSignature
from ..scalars import Scalar, is_zero
from .ast import Add, Const, Mul, Neg, One, Term, Var, Zero, left_comb, mk_neg

Monomial = tuple  # (Scalar, Term | None)


def _mono_mul(a: Monomial, b: Monomial, sig: AlgebraSignature) -> Monomial | None:
    (ca, ta), (cb, tb) = a, b
    coef = ca * cb
    if ta is None:
        return coef, tb
    if tb is None:
        return coef, ta
    if isinstance(ta, Const) and isinstance(tb, Const):
        v = ta.value * tb.value
        if v.is_zero():
            return None
        if v.is_real():
            return coef * v.coords[0], None
        return coef, Const(v)
    return coef, Mul(ta, tb)


def _leaf(t: Term, sig) -> list[Monomial]:
    if isinstance(t, Var):
        return [(Fraction(1), t)]
    if isinstance(t, Zero):
        return []
    if isinstance(t, One):
        return [(Fraction(1), None)]
    v = t.value
    if v.is_zero():
        return []
    if v.is_real():
        return [(v.coords[0], None)]
    return [(Fraction(1), t)]


def _expand(t: Term, sig) -> list[Monomial]:
    if isinstance(t, (Var, Zero, One, Const)):
        return _leaf(t, sig)
    if isinstance(t, Neg):
        return [(-c, m) for c, m in _expand(t.arg, sig)]
    if isinstance(t, Add):
        return _expand(t.left, sig) + _expand(t.right, sig)
    if isinstance(t, Mul):
        left, right = _expand(t.left, sig), _expand(t.right, sig)
        out = []
        for a in left:
            for b in right:
                m = _mono_mul(a, b, sig)
                if m is not None:
                    out.append(m)
        return out
    raise TypeError(f"not a term: {t!r}")


def expand(t: Term, sig: AlgebraSignature) -> list[Monomial]:
    """Collected monomials in first-occurrence order; constants merged into one."""
    coefs: dict = {}
    const_total = sig.zero()
    has_const = False
    for c, tree in _expand(t, sig):
        if tree is None:
            const_total = const_total + sig.scalar(c)
            has_const = True
        elif isinstance(tree, Const):
            const_total = const_total + tree.value.scale(c)
            has_const = True
        else:
            coefs[tree] = coefs.get(tree, Fraction(0)) + c
    out: list[Monomial] = []
    if has_const and not const_total.is_zero():
        if const_total.is_real():
            out.append((const_total.coords[0], None))
        else:
            out.append((Fraction(1), Const(const_total)))
    for tree, c in coefs.items():
        if not is_zero(c):
            out.append((c, tree))
    return out


def expand_difference(lhs: Term, rhs: Term, sig: AlgebraSignature) -> list[Monomial]:
    return expand(Add(lhs, Neg(rhs)), sig)


def comb_leaves(tree: Term) -> list[Term] | None:
    """Leaves of a left comb ``((l0 l1) l2) ...``, or ``None`` if not a left comb."""
    rev = []
    while isinstance(tree, Mul):
        if isinstance(tree.right, Mul):
            return None
        rev.append(tree.right)
        tree = tree.left
    rev.append(tree)
    return rev[::-1]


def first_break(leaves: Sequence[Term], rank: Mapping[str, int]) -> int | None:
    """Index of the first leaf violating the ordered form, or ``None``.

    Ordered means: variables in non-decreasing rank, and a constant only as
    the last leaf.
    """
    last = -1
    n = len(leaves)
    for idx, leaf in enumerate(leaves):
        if isinstance(leaf, Const):
            if idx != n - 1:
                return idx
            continue
        r = rank[leaf.name]
        if r < last:
            return idx
        last = r
    return None


def mono_is_ordered(tree: Term | None, rank: Mapping[str, int]) -> bool:
    if tree is None or isinstance(tree, (Var, Const)):
        return True
    leaves = comb_leaves(tree)
    return leaves is not None and first_break(leaves, rank) is None


def is_ordered_term(t: Term, rank: Mapping[str, int], sig: AlgebraSignature) -> bool:
    return all(mono_is_ordered(tree, rank) for _, tree in expand(t, sig))


def mono_term(coef: Scalar, tree: Term | None, sig: AlgebraSignature) -> Term:
    """Term for ``coef * tree`` with the real coefficient as the leftmost leaf."""
    from .ast import const

    if tree is None:
        return const(sig.scalar(coef))
    if coef == 1:
        return tree
    if coef == -1:
        return Neg(tree)
    leaves = comb_leaves(tree)
    c = const(sig.scalar(coef))
    if leaves is None:
        return Mul(c, tree)
    return left_comb([c] + leaves)


def monos_term(monos: Sequence[Monomial], sig: AlgebraSignature) -> Term:
    """Sum of monomials as a term (``Zero`` if empty); a leading minus becomes subtraction."""
    if not monos:
        return Zero()
    out = mono_term(*monos[0], sig)
    for coef, tree in monos[1:]:
        if not isinstance(coef, Fraction) or coef > 0:
            out = Add(out, mono_term(coef, tree, sig))
        else:
            out = Add(out, mk_neg(mono_term(-coef, tree, sig), sig))
    return out
