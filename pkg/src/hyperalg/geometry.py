"""Algebraic sets over quaternions and octonions.

A basic algebraic set is the common zero set of finitely many ordered
polynomials; an algebraic set is a finite union of basic ones. Intersection
distributes over the unions, so it is the union of all pairwise
intersections of components. Nothing here decides set equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .algebra import AlgebraElement, AlgebraSignature, get_signature
from .errors import ArityMismatch, SignatureMismatch
from .opoly import OrderedPoly, Exponents, format_opoly, op_eval, parse_opoly


@dataclass(frozen=True)
class BasicAlgebraicSet:
    polys: tuple[OrderedPoly, ...]

    def __post_init__(self):
        if not self.polys:
            raise ValueError("a basic algebraic set needs at least one polynomial")
        first = self.polys[0]
        for p in self.polys[1:]:
            if p.sig != first.sig:
                raise SignatureMismatch("polynomials over different algebras")
            if p.names != first.names:
                raise ArityMismatch("polynomials in different variables")

    @property
    def sig(self) -> AlgebraSignature:
        return self.polys[0].sig

    @property
    def names(self) -> tuple[str, ...]:
        return self.polys[0].names

    @property
    def nvars(self) -> int:
        return len(self.names)

    def contains(self, point: Sequence[AlgebraElement]) -> bool:
        return all(op_eval(p, list(point)).is_zero() for p in self.polys)


@dataclass(frozen=True)
class AlgebraicSet:
    basics: tuple[BasicAlgebraicSet, ...]
    extended: bool = False

    def __post_init__(self):
        if not self.basics:
            raise ValueError("an algebraic set needs at least one basic component")
        first = self.basics[0]
        for b in self.basics[1:]:
            if b.sig != first.sig:
                raise SignatureMismatch("components over different algebras")
            if b.names != first.names:
                raise ArityMismatch("components in different variables")

    @property
    def sig(self) -> AlgebraSignature:
        return self.basics[0].sig

    @property
    def names(self) -> tuple[str, ...]:
        return self.basics[0].names

    @property
    def nvars(self) -> int:
        return len(self.names)


def zero_set(*polys: OrderedPoly) -> AlgebraicSet:
    """``Z(p_1, ..., p_r)`` as a one-component algebraic set."""
    return AlgebraicSet((BasicAlgebraicSet(tuple(polys)),))


def member(S: AlgebraicSet, point: Sequence[AlgebraElement] | AlgebraElement) -> bool:
    """Exact membership: some component has all of its polynomials vanishing at ``point``."""
    if isinstance(point, AlgebraElement):
        point = [point]
    if len(point) != S.nvars:
        raise ArityMismatch(f"expected {S.nvars} coordinates, got {len(point)}")
    return any(b.contains(point) for b in S.basics)


def _check(a: AlgebraicSet, b: AlgebraicSet) -> None:
    if a.sig != b.sig:
        raise SignatureMismatch("sets over different algebras")
    if a.names != b.names:
        raise ArityMismatch("sets in different variables")


def set_union(a: AlgebraicSet, b: AlgebraicSet) -> AlgebraicSet:
    _check(a, b)
    return AlgebraicSet(a.basics + b.basics, a.extended or b.extended)


def set_intersect(a: AlgebraicSet, b: AlgebraicSet) -> AlgebraicSet:
    """Union over component pairs of the concatenated polynomial lists."""
    _check(a, b)
    parts = tuple(BasicAlgebraicSet(x.polys + y.polys) for x in a.basics for y in b.basics)
    return AlgebraicSet(parts, a.extended or b.extended)


def extend_scalars(S: AlgebraicSet) -> AlgebraicSet:
    """The same polynomials read over the real closure of the coefficients.

    Points may then carry algebraic coordinates; membership is unchanged
    for rational points.
    """
    return AlgebraicSet(S.basics, True)


# -- vanishing space ----------------------------------------------------------------


def _monomials(nvars: int, degree: int) -> list[Exponents]:
    out: list[Exponents] = []
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for v in combo:
                e[v] += 1
            out.append(tuple(e))
    return out


def _monomial_value(e: Exponents, point: Sequence[AlgebraElement], sig: AlgebraSignature) -> AlgebraElement:
    m = sig.one()
    for q, k in zip(point, e):
        for _ in range(k):
            m = m * q
    return m


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}`` by reduced row echelon form over Q."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(m, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def vanishing_space(
    points: Sequence[Sequence[AlgebraElement] | AlgebraElement],
    degree: int,
    sig: AlgebraSignature,
    names: Sequence[str] = ("q",),
) -> list[OrderedPoly]:
    """Basis of the ordered polynomials of degree at most ``degree`` vanishing on ``points``.

    Each monomial's right coefficient contributes ``k = sig.dim`` rational
    unknowns and each point ``k`` linear equations; the basis is an exact
    nullspace.
    """
    k = sig.dim
    monos = _monomials(len(names), degree)
    ncols = k * len(monos)
    rows: list[list[Fraction]] = []
    for pt in points:
        pt = [pt] if isinstance(pt, AlgebraElement) else list(pt)
        if len(pt) != len(names):
            raise ArityMismatch(f"expected {len(names)} coordinates")
        values = [_monomial_value(e, pt, sig) for e in monos]
        block = [[Fraction(0)] * ncols for _ in range(k)]
        for idx, m in enumerate(values):
            for i, j, l, c in sig._sparse:
                mi = m.coords[i]
                if mi:
                    block[l][idx * k + j] += Fraction(mi) * c
        rows.extend(block)
    out = []
    for vec in nullspace(rows, ncols):
        terms = {e: sig.element(vec[idx * k:(idx + 1) * k]) for idx, e in enumerate(monos)}
        out.append(OrderedPoly.from_dict(sig, names, terms))
    return out


# -- JSON -----------------------------------------------------------------------------


def set_to_json(S: AlgebraicSet) -> dict:
    return {
        "signature": S.sig.name,
        "variables": list(S.names),
        "extended": S.extended,
        "union": [{"polys": [format_opoly(p) for p in b.polys]} for b in S.basics],
    }


def set_from_json(obj: dict, sig: AlgebraSignature | None = None) -> AlgebraicSet:
    """Parse ``{"union": [{"polys": [...]}, ...]}``; signature and variables are optional."""
    if sig is None:
        sig = get_signature(obj.get("signature", "quaternion"))
    names = obj.get("variables")
    basics = []
    for comp in obj["union"]:
        polys = tuple(parse_opoly(text, sig, names) for text in comp["polys"])
        basics.append(polys)
    if names is None:
        found: list[str] = []
        for polys in basics:
            for p in polys:
                for n in p.names:
                    if n not in found:
                        found.append(n)
        from .formula.ast import natural_key

        found.sort(key=natural_key)
        basics = [tuple(parse_opoly(format_opoly(p), sig, found) for p in polys) for polys in basics]
    return AlgebraicSet(tuple(BasicAlgebraicSet(p) for p in basics), bool(obj.get("extended", False)))
