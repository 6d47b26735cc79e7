"""Realization of a real algebraic set as a basic algebraic set of ordered polynomials.

For ``X = Z(p_1, ..., p_r)`` in ``R^n`` with ``k = sig.dim``:

1. pad to ``R^(k s)`` with ``s = ceil(n / k)`` and force the padding to 0;
2. replace each real variable by the algebra term extracting the matching
   coordinate of an algebra variable ``q_t`` (a non-ordered polynomial whose
   value is that coordinate);
3. rewrite to ordered form; the fresh variables are forced by triangular
   definitions, which give the forward map ``q -> (q, t(q))`` onto the
   graph, and the atoms give the target system in ``s + #fresh`` variables.

``mode="conjunction"`` keeps one atom per generator and padding
coordinate; ``mode="sos"`` uses the single atom ``sum p_i^2 + sum pad^2 = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..algebra import QUATERNION, AlgebraElement, AlgebraSignature, extraction_terms
from ..formula.ast import Add, And, Const, Eq, Exists, Formula, Mul, Neg, Term, Var, Zero, conjunction, const
from ..formula.evaluate import triangular_definitions
from ..formula.rewrite import RewriteTrace, to_ordered
from ..opoly import OrderedPoly, format_opoly, from_term, op_eval
from ..scalars import Scalar, as_scalar
from .realpoly import RealPoly

MODES = ("conjunction", "sos")


def extraction_term(var: str, c: int, sig: AlgebraSignature) -> Term:
    """Algebra term whose value is the ``c``-th coordinate of ``var``."""
    left, combo = extraction_terms(sig)[c]
    x = Var(var)
    total: Term | None = None
    for coef, h in combo:
        piece: Term = x if h == 0 else Mul(Mul(Const(sig.unit(h)), x), Const(sig.unit(h)))
        if coef != 1:
            piece = Mul(const(sig.scalar(coef)), piece)
        total = piece if total is None else Add(total, piece)
    return Mul(const(left), total)


def _poly_term(p: RealPoly, subst: dict[str, Term], sig: AlgebraSignature) -> Term:
    """Algebra term of a real polynomial with each variable replaced by a term."""
    out: Term | None = None
    for mono, c in p.sorted_terms():
        factors: list[Term] = [subst[v] for v, e in mono for _ in range(e)]
        m: Term = const(sig.scalar(c))
        for fac in factors:
            m = Mul(m, fac)
        out = m if out is None else Add(out, m)
    return out if out is not None else Zero()


@dataclass
class RealizationResult:
    """Target system, forward map and projection data of a realization."""

    sig: AlgebraSignature
    real_vars: list[str]
    alg_vars: list[str]
    names: list[str]
    target: list[OrderedPoly]
    forward_map: list[tuple[str, OrderedPoly]]
    mode: str
    formula: Formula
    ordered: Formula
    trace: RewriteTrace = field(repr=False)

    @property
    def proj_arity(self) -> int:
        return len(self.alg_vars)

    def lift(self, x: Sequence) -> list[AlgebraElement]:
        """Algebra point whose coordinates are ``x`` followed by zero padding."""
        k = self.sig.dim
        vals = [as_scalar(v) for v in x] + [Fraction(0)] * (k * self.proj_arity - len(x))
        if len(x) != len(self.real_vars):
            raise ValueError(f"expected {len(self.real_vars)} coordinates")
        return [self.sig.element(vals[t * k:(t + 1) * k]) for t in range(self.proj_arity)]

    def forward(self, x: Sequence) -> list[AlgebraElement]:
        """Graph point ``(q, t(q))`` over ``q = lift(x)``."""
        env = dict(zip(self.alg_vars, self.lift(x)))
        zero = self.sig.zero()
        for name, poly in self.forward_map:
            env[name] = op_eval(poly, [env.get(n, zero) for n in self.names])
        return [env[n] for n in self.names]

    def project(self, point: Sequence[AlgebraElement]) -> list[Scalar]:
        coords = [c for q in point[: self.proj_arity] for c in q.coords]
        return coords[: len(self.real_vars)]

    def member(self, point: Sequence[AlgebraElement]) -> bool:
        return all(op_eval(p, list(point)).is_zero() for p in self.target)

    def report(self) -> dict:
        return {
            "signature": self.sig.name,
            "mode": self.mode,
            "real_variables": list(self.real_vars),
            "variables": list(self.names),
            "proj_arity": self.proj_arity,
            "target": [format_opoly(p) for p in self.target],
            "forward_map": [{"var": v, "poly": format_opoly(p)} for v, p in self.forward_map],
        }


def _strip(f: Formula) -> tuple[list[str], list[Eq]]:
    """Fresh variables and atoms of a conjunction of (existential) ordered blocks."""
    block: list[str] = []
    atoms: list[Eq] = []

    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Exists):
            block.append(g.var)
            stack.append(g.body)
        elif isinstance(g, And):
            stack += [g.right, g.left]
        elif isinstance(g, Eq):
            atoms.append(g)
        else:
            raise TypeError("unexpected connective in rewritten system")
    return block, atoms


def realize(
    system: Sequence[RealPoly],
    real_vars: Sequence[str] | None = None,
    sig: AlgebraSignature = QUATERNION,
    mode: str = "conjunction",
    alg_prefix: str = "q",
) -> RealizationResult:
    """Basic algebraic set over ``sig`` realizing ``Z(system)`` in the sense described above."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if not system:
        raise ValueError("empty system; use the zero polynomial for the whole space")
    if real_vars is None:
        seen: dict[str, None] = {}
        for p in system:
            for v in p.variables():
                seen.setdefault(v)
        real_vars = list(seen)
    real_vars = list(real_vars)
    extra = {v for p in system for v in p.variables()} - set(real_vars)
    if extra:
        raise ValueError(f"variables not listed: {sorted(extra)}")
    k = sig.dim
    s = max(1, -(-len(real_vars) // k))
    alg_vars = [f"{alg_prefix}{t + 1}" for t in range(s)]
    subst = {v: extraction_term(alg_vars[i // k], i % k, sig) for i, v in enumerate(real_vars)}
    pads = [extraction_term(alg_vars[i // k], i % k, sig) for i in range(len(real_vars), k * s)]

    lhs = [_poly_term(p, subst, sig) for p in system if not p.is_zero()]
    if mode == "conjunction":
        atoms = [Eq(t, Zero()) for t in lhs + pads]
    else:
        squares = [Mul(t, t) for t in lhs + pads]
        total: Term | None = None
        for sq in squares:
            total = sq if total is None else Add(total, sq)
        atoms = [Eq(total, Zero())] if total is not None else []
    f = conjunction(atoms) if atoms else Eq(Zero(), Zero())

    ordered, trace = to_ordered(f, sig, order=alg_vars)
    fresh, eqs = _strip(ordered)
    names = alg_vars + fresh
    target = [from_term(Add(a.lhs, Neg(a.rhs)), sig, names) for a in eqs]
    target = [p for p in target if not p.is_zero()] or [OrderedPoly.from_dict(sig, names, {})]

    body = conjunction(eqs)
    forward: list[tuple[str, OrderedPoly]] = []
    if fresh:
        for v, rhs in triangular_definitions(fresh, body, sig):
            forward.append((v, from_term(rhs, sig, names)))
    return RealizationResult(sig, real_vars, alg_vars, names, target, forward, mode, f, ordered, trace)

