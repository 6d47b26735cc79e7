"""Term and formula trees for the ring language with algebra constants.

Products are binary and keep their association; for octonions the tree
shape carries meaning.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

from ..algebra import AlgebraElement


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: AlgebraElement


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Neg:
    arg: "Term"


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


Term = Union[Var, Const, Zero, One, Neg, Add, Mul]


@dataclass(frozen=True)
class Eq:
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


Formula = Union[Eq, And, Or, Not, Exists, Forall]


# -- constant-folding constructors ---------------------------------------------------


def const(value: AlgebraElement) -> Term:
    """``Zero``/``One`` for 0 and 1, otherwise ``Const``."""
    if value.is_zero():
        return Zero()
    if value == value.sig.one():
        return One()
    return Const(value)


def const_value(t: Term, sig) -> AlgebraElement | None:
    if isinstance(t, Const):
        return t.value
    if isinstance(t, Zero):
        return sig.zero()
    if isinstance(t, One):
        return sig.one()
    return None


def is_constant(t: Term) -> bool:
    return isinstance(t, (Const, Zero, One))


def mk_neg(t: Term, sig) -> Term:
    v = const_value(t, sig)
    return const(-v) if v is not None else Neg(t)


def mk_add(a: Term, b: Term, sig) -> Term:
    va, vb = const_value(a, sig), const_value(b, sig)
    if va is not None and vb is not None:
        return const(va + vb)
    return Add(a, b)


def mk_mul(a: Term, b: Term, sig) -> Term:
    va, vb = const_value(a, sig), const_value(b, sig)
    if va is not None and vb is not None:
        return const(va * vb)
    return Mul(a, b)


def conjunction(parts: list[Formula]) -> Formula:
    if not parts:
        raise ValueError("empty conjunction")
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def left_comb(leaves: list[Term]) -> Term:
    out = leaves[0]
    for leaf in leaves[1:]:
        out = Mul(out, leaf)
    return out


# -- traversal ---------------------------------------------------------------------


def term_vars(t: Term) -> Iterator[str]:
    if isinstance(t, Var):
        yield t.name
    elif isinstance(t, Neg):
        yield from term_vars(t.arg)
    elif isinstance(t, (Add, Mul)):
        yield from term_vars(t.left)
        yield from term_vars(t.right)


def atoms(f: Formula) -> Iterator[Eq]:
    if isinstance(f, Eq):
        yield f
    elif isinstance(f, (And, Or)):
        yield from atoms(f.left)
        yield from atoms(f.right)
    elif isinstance(f, Not):
        yield from atoms(f.arg)
    else:
        yield from atoms(f.body)


def all_vars(f: Formula) -> list[str]:
    """Every variable name (free or bound), first occurrence order."""
    seen: dict[str, None] = {}

    def walk(g: Formula):
        if isinstance(g, Eq):
            for v in term_vars(g.lhs):
                seen.setdefault(v)
            for v in term_vars(g.rhs):
                seen.setdefault(v)
        elif isinstance(g, (And, Or)):
            walk(g.left)
            walk(g.right)
        elif isinstance(g, Not):
            walk(g.arg)
        else:
            seen.setdefault(g.var)
            walk(g.body)

    walk(f)
    return list(seen)


def free_vars(f: Formula, bound: frozenset = frozenset()) -> set[str]:
    if isinstance(f, Eq):
        return (set(term_vars(f.lhs)) | set(term_vars(f.rhs))) - bound
    if isinstance(f, (And, Or)):
        return free_vars(f.left, bound) | free_vars(f.right, bound)
    if isinstance(f, Not):
        return free_vars(f.arg, bound)
    return free_vars(f.body, bound | {f.var})


def bound_vars(f: Formula) -> list[str]:
    out: dict[str, None] = {}

    def walk(g):
        if isinstance(g, (And, Or)):
            walk(g.left)
            walk(g.right)
        elif isinstance(g, Not):
            walk(g.arg)
        elif isinstance(g, (Exists, Forall)):
            out.setdefault(g.var)
            walk(g.body)

    walk(f)
    return list(out)


def has_quantifier(f: Formula) -> bool:
    if isinstance(f, Eq):
        return False
    if isinstance(f, (And, Or)):
        return has_quantifier(f.left) or has_quantifier(f.right)
    if isinstance(f, Not):
        return has_quantifier(f.arg)
    return True


_NAT = re.compile(r"(\d+)")


def natural_key(name: str):
    return [int(p) if p.isdigit() else p for p in _NAT.split(name)]


def variable_order(f: Formula) -> list[str]:
    """Free variables in natural order, then bound variables by first binding."""
    free = sorted(free_vars(f), key=natural_key)
    bound = [v for v in bound_vars(f) if v not in free]
    return free + bound
