"""Ordered normal form for formulas.

Every atom ``l = r`` whose expansion contains a non-ordered monomial is
replaced by an existential block over fresh variables:

1. parenthesis elimination: while a monomial tree has a product as a right
   child, the first innermost such product ``n`` is replaced by a fresh
   ``s`` and the constraint ``s - n = 0`` is added;
2. variable ordering: in each resulting left comb, the tail starting at the
   first out-of-order leaf is replaced leaf-group by leaf-group with fresh
   ``t`` variables constrained by ``t - leaf = 0``; a trailing constant
   stays as the right coefficient.

Fresh variables rank after every variable of the input, in introduction
order, so all produced monomials are ordered. A sub-monomial or leaf that
repeats within one atom reuses its fresh variable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..algebra import AlgebraSignature
from .ast import (
    And,
    Const,
    Eq,
    Exists,
    Forall,
    Formula,
    Mul,
    Not,
    Or,
    Term,
    Var,
    Zero,
    all_vars,
    conjunction,
    left_comb,
    variable_order,
)
from .normal import Monomial, comb_leaves, expand_difference, first_break, mono_is_ordered, monos_term


@dataclass(frozen=True)
class RewriteStep:
    """One substitution.

    ``atom``: index of the atom (pre-order); ``phase``: ``"paren"`` or
    ``"order"``; ``target``: ``"main"`` or the fresh variable whose
    definition is rewritten; ``mono``: monomial index within the target;
    ``where``: path of ``"L"``/``"R"`` moves to the replaced node (paren) or
    the replaced leaf span ``(start, stop)`` (order); ``fresh``: variable
    name; ``new``: whether this step introduced the variable (and hence the
    constraint ``constraint``) or reused it.
    """

    atom: int
    phase: str
    target: str
    mono: int
    where: tuple
    fresh: str
    new: bool
    replaced: Term
    constraint: Formula | None


@dataclass
class RewriteTrace:
    steps: list[RewriteStep] = field(default_factory=list)
    order: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def fresh_variables(self) -> list[str]:
        return [s.fresh for s in self.steps if s.new]


class _Fresh:
    def __init__(self, taken: set[str], rank: dict[str, int]):
        self.taken = taken
        self.rank = rank
        self.counters = {"s": 0, "t": 0}

    def make(self, prefix: str) -> str:
        while True:
            self.counters[prefix] += 1
            name = f"{prefix}{self.counters[prefix]}"
            if name not in self.taken:
                self.taken.add(name)
                self.rank[name] = len(self.rank)
                return name


# -- tree paths -------------------------------------------------------------------------


def _get(tree: Term, path: tuple) -> Term:
    for step in path:
        tree = tree.left if step == "L" else tree.right
    return tree


def _replace(tree: Term, path: tuple, new: Term) -> Term:
    if not path:
        return new
    if path[0] == "L":
        return Mul(_replace(tree.left, path[1:], new), tree.right)
    return Mul(tree.left, _replace(tree.right, path[1:], new))


def _innermost_right_product(tree: Term) -> tuple | None:
    """Path of the first (left-to-right, innermost) right child that is a product."""

    def walk(t: Term, path: tuple) -> tuple | None:
        if not isinstance(t, Mul):
            return None
        found = walk(t.left, path + ("L",))
        if found is not None:
            return found
        if isinstance(t.right, Mul):
            inner = walk(t.right, path + ("R",))
            return inner if inner is not None else path + ("R",)
        return None

    return walk(tree, ())


def _groups(leaves: list[Term], start: int) -> list[tuple[int, int]]:
    """Leaf spans to replace in the ordering phase (runs of one variable, single constants)."""
    out = []
    n = len(leaves)
    i = start
    while i < n:
        leaf = leaves[i]
        if isinstance(leaf, Const):
            if i == n - 1:
                break
            out.append((i, i + 1))
            i += 1
            continue
        j = i + 1
        while j < n and leaves[j] == leaf:
            j += 1
        out.append((i, j))
        i = j
    return out


# -- per-atom rewriting -------------------------------------------------------------------


class _AtomState:
    """Monomials of the main equation plus fresh definitions ``v - tree = 0``."""

    def __init__(self, monos: list[Monomial]):
        self.main: list[list] = [[c, t] for c, t in monos]
        self.defs: list[list] = []  # [name, tree]

    def tree(self, target: str, mono: int) -> Term:
        if target == "main":
            return self.main[mono][1]
        return next(d for d in self.defs if d[0] == target)[1]

    def set_tree(self, target: str, mono: int, tree: Term) -> None:
        if target == "main":
            self.main[mono][1] = tree
        else:
            next(d for d in self.defs if d[0] == target)[1] = tree

    def targets(self):
        for idx, (_, tree) in enumerate(self.main):
            yield "main", idx
        for d in self.defs:
            yield d[0], 0

    def formula(self, sig: AlgebraSignature) -> Formula:
        parts: list[Formula] = [Eq(monos_term([(c, t) for c, t in self.main], sig), Zero())]
        for name, tree in self.defs:
            parts.append(_definition(name, tree, sig))
        body = conjunction(parts)
        for name, _ in reversed(self.defs):
            body = Exists(name, body)
        return body


def _definition(name: str, tree: Term, sig: AlgebraSignature) -> Formula:
    return Eq(monos_term([(1, Var(name)), (-1, tree)], sig), Zero())


def _apply_paren(state: _AtomState, target, mono, path, fresh, new, sig) -> Term:
    tree = state.tree(target, mono)
    sub = _get(tree, path)
    state.set_tree(target, mono, _replace(tree, path, Var(fresh)))
    if new:
        state.defs.append([fresh, sub])
    return sub


def _apply_order(state: _AtomState, target, mono, span, fresh, new, sig) -> Term:
    tree = state.tree(target, mono)
    leaves = comb_leaves(tree)
    start, stop = span
    leaf = leaves[start]
    leaves = leaves[:start] + [Var(fresh)] * (stop - start) + leaves[stop:]
    state.set_tree(target, mono, left_comb(leaves))
    if new:
        state.defs.append([fresh, leaf])
    return leaf


def _rewrite_atom(
    atom: Eq, index: int, sig: AlgebraSignature, fresh: _Fresh, steps: list[RewriteStep]
) -> Formula:
    rank = fresh.rank
    monos = expand_difference(atom.lhs, atom.rhs, sig)
    if all(mono_is_ordered(t, rank) for _, t in monos):
        return atom
    state = _AtomState(monos)

    def record(phase, target, mono, where, name, new, replaced):
        constraint = _definition(name, replaced, sig) if new else None
        steps.append(RewriteStep(index, phase, target, mono, where, name, new, replaced, constraint))

    # phase 1: parenthesis elimination (also applied inside new definitions)
    memo_s: dict[Term, str] = {}
    work = list(state.targets())
    while work:
        target, mono = work.pop(0)
        while True:
            tree = state.tree(target, mono)
            if tree is None:
                break
            path = _innermost_right_product(tree)
            if path is None:
                break
            sub = _get(tree, path)
            new = sub not in memo_s
            name = memo_s[sub] if not new else fresh.make("s")
            memo_s[sub] = name
            _apply_paren(state, target, mono, path, name, new, sig)
            record("paren", target, mono, path, name, new, sub)
            if new:
                work.append((name, 0))

    # phase 2: variable ordering
    memo_t: dict[Term, str] = {}
    for target, mono in list(state.targets()):
        tree = state.tree(target, mono)
        if tree is None or isinstance(tree, (Var, Const)):
            continue
        leaves = comb_leaves(tree)
        h = first_break(leaves, rank)
        if h is None:
            continue
        last = max((rank[l.name] for l in leaves[:h] if isinstance(l, Var)), default=-1)
        for start, stop in _groups(leaves, h):
            leaf = comb_leaves(state.tree(target, mono))[start]
            name = memo_t.get(leaf)
            new = name is None or rank[name] <= last
            if new:
                name = fresh.make("t")
                memo_t[leaf] = name
            _apply_order(state, target, mono, (start, stop), name, new, sig)
            record("order", target, mono, (start, stop), name, new, leaf)
            last = rank[name]
    return state.formula(sig)


def _map_atoms(f: Formula, fn: Callable[[Eq, int], Formula], counter: list[int]) -> Formula:
    if isinstance(f, Eq):
        idx = counter[0]
        counter[0] += 1
        return fn(f, idx)
    if isinstance(f, And):
        return And(_map_atoms(f.left, fn, counter), _map_atoms(f.right, fn, counter))
    if isinstance(f, Or):
        return Or(_map_atoms(f.left, fn, counter), _map_atoms(f.right, fn, counter))
    if isinstance(f, Not):
        return Not(_map_atoms(f.arg, fn, counter))
    if isinstance(f, Exists):
        return Exists(f.var, _map_atoms(f.body, fn, counter))
    return Forall(f.var, _map_atoms(f.body, fn, counter))


def _setup(f: Formula, order: list[str] | None) -> _Fresh:
    order = list(order) if order is not None else variable_order(f)
    names = set(all_vars(f)) | set(order)
    missing = [v for v in all_vars(f) if v not in order]
    rank = {v: i for i, v in enumerate(order + missing)}
    return _Fresh(names, rank)


def to_ordered(
    f: Formula, sig: AlgebraSignature, order: list[str] | None = None
) -> tuple[Formula, RewriteTrace]:
    """Equivalent formula whose atoms are all ordered polynomials, with its trace.

    ``order`` fixes the variable order; by default free variables come first
    (natural name order), then bound variables by first binding.
    """
    fresh = _setup(f, order)
    steps: list[RewriteStep] = []
    out = _map_atoms(f, lambda a, i: _rewrite_atom(a, i, sig, fresh, steps), [0])
    ranked = sorted(fresh.rank, key=fresh.rank.get)
    return out, RewriteTrace(steps, ranked)


def replay(f: Formula, trace: RewriteTrace, sig: AlgebraSignature) -> Formula:
    """Rebuild the rewritten formula from ``f`` and the recorded substitutions only."""
    by_atom: dict[int, list[RewriteStep]] = {}
    for s in trace.steps:
        by_atom.setdefault(s.atom, []).append(s)

    def redo(atom: Eq, idx: int) -> Formula:
        steps = by_atom.get(idx)
        if not steps:
            return atom
        state = _AtomState(expand_difference(atom.lhs, atom.rhs, sig))
        for s in steps:
            apply = _apply_paren if s.phase == "paren" else _apply_order
            apply(state, s.target, s.mono, s.where, s.fresh, s.new, sig)
        return state.formula(sig)

    return _map_atoms(f, redo, [0])


def is_ordered_formula(f: Formula, sig: AlgebraSignature, order: list[str]) -> bool:
    """Every atom's difference expands to ordered monomials under ``order``."""
    from .ast import atoms

    rank = {v: i for i, v in enumerate(order)}
    for a in atoms(f):
        for _, tree in expand_difference(a.lhs, a.rhs, sig):
            if not mono_is_ordered(tree, rank):
                return False
    return True
