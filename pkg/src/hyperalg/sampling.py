"""Seeded random generators for scalars, elements, terms and formulas.

Shared by the self-test command and the test suite so that both exercise
the same distributions.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import AlgebraElement, AlgebraSignature
from .formula.ast import Add, And, Const, Eq, Formula, Mul, Neg, Not, One, Or, Term, Var, Zero


def rational(rng: random.Random, bound: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def element(rng: random.Random, sig: AlgebraSignature, bound: int = 5, den: int = 4, sparse: float = 0.0) -> AlgebraElement:
    coords = [Fraction(0) if rng.random() < sparse else rational(rng, bound, den) for _ in range(sig.dim)]
    return AlgebraElement(sig, tuple(coords))


def unit_sphere_point(rng: random.Random, sig: AlgebraSignature, bound: int = 6) -> AlgebraElement:
    """Exact purely imaginary unit: inverse stereographic image of a random rational point."""
    m = sig.dim - 1
    while True:
        u = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(m - 1)]
        s = sum(x * x for x in u)
        coords = [2 * x / (1 + s) for x in u] + [(s - 1) / (1 + s)]
        if rng.random() < 0.5:
            rng.shuffle(coords)
        return AlgebraElement(sig, tuple([Fraction(0)] + coords))


def term(rng: random.Random, sig: AlgebraSignature, names: list[str], depth: int) -> Term:
    if depth <= 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.6:
            return Var(rng.choice(names))
        if r < 0.7:
            return One()
        if r < 0.75:
            return Zero()
        return Const(element(rng, sig, 3, 2, sparse=0.6))
    kind = rng.random()
    if kind < 0.45:
        return Mul(term(rng, sig, names, depth - 1), term(rng, sig, names, depth - 1))
    if kind < 0.85:
        return Add(term(rng, sig, names, depth - 1), term(rng, sig, names, depth - 1))
    return Neg(term(rng, sig, names, depth - 1))


def formula(rng: random.Random, sig: AlgebraSignature, names: list[str], depth: int = 5) -> Formula:
    """Quantifier-free formula whose atoms have term depth at most ``depth``."""

    def atom() -> Formula:
        return Eq(term(rng, sig, names, depth), term(rng, sig, names, rng.randint(0, depth)))

    r = rng.random()
    if r < 0.6:
        return atom()
    if r < 0.75:
        return And(atom(), atom())
    if r < 0.9:
        return Or(atom(), atom())
    return Not(atom())


def assignment(rng: random.Random, sig: AlgebraSignature, names: list[str]) -> dict[str, AlgebraElement]:
    """Random point, often with zero or repeated coordinates so that atoms hold sometimes."""
    out = {}
    for n in names:
        r = rng.random()
        if r < 0.15:
            out[n] = sig.zero()
        elif r < 0.3 and out:
            out[n] = rng.choice(list(out.values()))
        elif r < 0.45:
            out[n] = sig.unit(rng.randrange(sig.dim))
        else:
            out[n] = element(rng, sig, 3, 3)
    return out


def univariate(rng: random.Random, sig: AlgebraSignature, max_degree: int = 5, bound: int = 3) -> "OrderedPoly":
    """Nonconstant one-variable ordered polynomial of degree at most ``max_degree``.

    About a third of the draws carry a real quadratic or linear factor, so
    that spheres and real isolated zeros show up alongside generic zeros.
    """
    from .opoly import OrderedPoly, conv_mul

    def draw(deg: int) -> OrderedPoly:
        cs = [element(rng, sig, bound, 2, sparse=0.4) for _ in range(deg)]
        top = element(rng, sig, bound, 1, sparse=0.5)
        if top.is_zero():
            top = sig.one()
        return OrderedPoly.univariate(sig, cs + [top])

    degree = rng.randint(1, max_degree)
    r = rng.random()
    if degree >= 3 and r < 0.2:
        a, b = rng.randint(-2, 2), rng.randint(1, 4)
        real = OrderedPoly.univariate(sig, [sig.scalar(a * a + b), sig.scalar(-2 * a), sig.one()])
        return conv_mul(real, draw(degree - 2))
    if degree >= 2 and r < 0.35:
        real = OrderedPoly.univariate(sig, [sig.scalar(rng.randint(-3, 3)), sig.one()])
        return conv_mul(real, draw(degree - 1))
    return draw(degree)
