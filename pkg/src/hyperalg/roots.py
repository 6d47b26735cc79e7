"""Zero sets of one-variable ordered polynomials over quaternions and octonions.

The zero set of a nonconstant ``p`` is a finite union of isolated points and
spheres ``{x + y*I : I^2 = -1, I imaginary unit}``. The real companion
``c = p * conj(p)`` governs it:

* ``g``, the gcd of the coordinate polynomials of ``p``, collects the roots
  shared by every coordinate: its real roots are isolated real zeros and
  each conjugate pair ``x +- iy`` of non-real roots is a whole sphere;
* every other conjugate pair of roots of ``c`` (the roots of ``h``, the
  square-free part of ``c`` with ``g`` divided out) carries exactly one
  isolated zero ``r = -a * b^-1`` where ``p(q) = q*b + a`` on that sphere.

Quadratic cases are solved in closed form. Otherwise the roots of ``g`` and
``h`` are enclosed in certified complex boxes and each coordinate of each
point is obtained exactly as a root of an integer pair resolvent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Union

from mpmath import iv

from . import certify, upoly
from .algebra import AlgebraElement, AlgebraSignature, alg_inv, alg_mul, format_element
from .errors import ConstantPolynomial, ZeroPolynomial
from .opoly import OrderedPoly, companion, format_opoly, op_eval, reduce_mod_central
from .scalars import (
    RealAlgebraic,
    Scalar,
    count_real_roots,
    format_scalar,
    is_zero,
    isolate_real_roots,
    poly_sign_at,
    scalar_enclosure,
    scalar_sqrt,
    select_root,
)


@dataclass(frozen=True)
class Isolated:
    point: AlgebraElement


@dataclass(frozen=True)
class Sphere:
    x: Scalar
    y: Scalar

    def contains(self, q: AlgebraElement) -> bool:
        if q.coords[0] != self.x:
            return False
        im = Fraction(0)
        for c in q.coords[1:]:
            im = im + c * c
        return im == self.y * self.y


RootDescriptor = Union[Isolated, Sphere]


@dataclass
class RootSet:
    descriptors: list[RootDescriptor]
    input: OrderedPoly
    certified: list[str] = field(default_factory=list)

    def points(self) -> list[AlgebraElement]:
        return [d.point for d in self.descriptors if isinstance(d, Isolated)]

    def spheres(self) -> list[Sphere]:
        return [d for d in self.descriptors if isinstance(d, Sphere)]

    def __len__(self) -> int:
        return len(self.descriptors)

    def contains(self, q: AlgebraElement) -> bool:
        """Exact membership for points with rational coordinates."""
        return any(s.contains(q) for s in self.spheres()) or any(pt == q for pt in self.points())


def zero_locus_dimension(rs: RootSet) -> int:
    """0 for points only, otherwise the sphere dimension (2 for quaternions, 6 for octonions)."""
    return rs.input.sig.dim - 2 if rs.spheres() else 0


# -- helpers --------------------------------------------------------------------------


def _coordinate_polys(p: OrderedPoly) -> list[list[Fraction]]:
    cs = p.coeffs()
    return [[c.coords[l] for c in cs] for l in range(p.sig.dim)]


def _check_input(p: OrderedPoly) -> None:
    if p.nvars != 1:
        raise ValueError("solve needs a one-variable polynomial")
    if p.is_zero():
        raise ZeroPolynomial("every point is a zero of the zero polynomial")
    if p.degree() == 0:
        raise ConstantPolynomial("a nonzero constant has no zeros")
    for _, c in p.terms:
        if any(isinstance(x, RealAlgebraic) for x in c.coords):
            raise ValueError("solve needs rational coefficients")


def _integer_coefficients(p: OrderedPoly) -> tuple[list[list[int]], int]:
    """``(L*a_h as integer coordinate vectors, L)``."""
    cs = p.coeffs()
    den = 1
    for c in cs:
        for x in c.coords:
            den = lcm(den, Fraction(x).denominator)
    return [[int(x * den) for x in c.coords] for c in cs], den


class _PairAlgebra:
    """Interval evaluation of the sphere reduction at a pair of roots of an integer polynomial.

    For roots ``z_i, z_j`` of ``f`` with leading coefficient ``A``, put
    ``w = A z``, ``T = w_i + w_j`` and ``N = w_i w_j`` (algebraic integers).
    With ``alpha_0 = 0, beta_0 = 1, alpha_{h+1} = T alpha_h + beta_h,
    beta_{h+1} = -N alpha_h`` the vectors

        B = sum_h A^(d-h) alpha_h (L a_h),   Av = sum_h A^(d-h) beta_h (L a_h)

    equal ``A^(d-1) L b`` and ``A^d L a`` for a conjugate pair, so that
    ``r_m = -(Av * conj(B))_m / (A |B|^2)``.
    """

    def __init__(self, p: OrderedPoly, lc: int):
        self.sig = p.sig
        self.coeffs, _ = _integer_coefficients(p)
        self.lc = lc
        self.d = len(self.coeffs) - 1

    def reduce(self, zi, zj):
        A, d = self.lc, self.d
        T = (zi + zj) * A
        N = zi * zj * (A * A)
        k = self.sig.dim
        b = [iv.mpc(0)] * k
        a = [iv.mpc(0)] * k
        alpha, beta = iv.mpc(0), iv.mpc(1)
        for h, vec in enumerate(self.coeffs):
            scale = A ** (d - h)
            for m, c in enumerate(vec):
                if c:
                    b[m] = b[m] + alpha * (scale * c)
                    a[m] = a[m] + beta * (scale * c)
            alpha, beta = T * alpha + beta, -(N * alpha)
        return T, N, b, a

    def point(self, zi, zj):
        """Per-coordinate ``(n_m, d)`` with ``r_m = n_m / d``."""
        _, _, b, a = self.reduce(zi, zj)
        k = self.sig.dim
        bc = [b[0]] + [-x for x in b[1:]]
        prod = [iv.mpc(0)] * k
        for i, j, l, c in self.sig._sparse:
            prod[l] = prod[l] + a[i] * bc[j] * int(c)
        den = iv.mpc(0)
        for x in b:
            den = den + x * x
        den = den * self.lc
        return [(-x, den) for x in prod]


def _resolvents(boxes, fn, need: list[int]) -> list[list[int]] | None:
    """One resolvent per output slot of ``fn(z_i, z_j) -> [(n, d), ...]``."""
    pairs_by_slot: list[list] | None = None
    m = len(boxes)
    for i in range(m):
        for j in range(i + 1, m):
            vals = fn(boxes[i], boxes[j])
            if pairs_by_slot is None:
                pairs_by_slot = [[] for _ in vals]
            for slot, v in zip(pairs_by_slot, vals):
                slot.append(v)
    out = []
    for pairs in pairs_by_slot or []:
        r = certify.resolvent(pairs, need)
        if r is None:
            return None
        if not any(r):
            raise ArithmeticError("degenerate pair resolvent")
        out.append(r)
    return out


def _pair_values(enc: certify.RootEnclosures, fn, slots: int):
    """Exact resolvents for ``fn`` and a factory of enclosures for one conjugate pair."""
    prec = max(128, enc.prec)
    while True:
        need: list[int] = []
        with certify.precision(prec):
            res = _resolvents(enc.at(prec), fn, need)
        if res is not None:
            break
        # rounding needs absolute accuracy below 1/2 on the largest coefficient
        prec = max(2 * prec, max(need, default=0) + prec // 2 + 64)
        if prec > certify.MAX_PREC:
            raise ArithmeticError("pair resolvent did not round")

    cache: dict[tuple[int, int, int], list] = {}

    def enclosure(k: int, j: int, slot: int):
        def interval(bits: int):
            p = max(prec, 2 * bits + 64)
            boxes = enc.at(p)
            key = (k, j, enc.prec)
            if key not in cache:
                with certify.precision(enc.prec):
                    cache[key] = [certify.real_enclosure(n / d) for n, d in fn(boxes[k], boxes[j])]
            return cache[key][slot]

        return interval

    return res, enclosure


def _sphere_values(zi, zj, lc: int):
    A = lc
    T = (zi + zj) * A
    N = zi * zj * (A * A)
    return [(T, iv.mpc(2 * A)), (N * 4 - T * T, iv.mpc(4 * A * A))]


# -- the solver -----------------------------------------------------------------------


def _real_isolated(p: OrderedPoly, g: list[int], coord_polys) -> list[RootDescriptor]:
    out: list[RootDescriptor] = []
    for t in isolate_real_roots(g):
        for P in coord_polys:
            if any(P) and poly_sign_at(P, t) != 0:
                raise AssertionError("real root of the coordinate gcd is not a zero")
        out.append(Isolated(p.sig.scalar(t)))
    return out


def _spheres(p: OrderedPoly, g: list[int], nreal: int) -> list[RootDescriptor]:
    if len(g) - 1 == nreal:
        return []
    found: list[tuple[Scalar, Scalar]] = []
    if len(g) == 3:
        g0, g1, g2 = (Fraction(c) for c in g)
        found.append((-g1 / (2 * g2), (4 * g0 * g2 - g1 * g1) / (4 * g2 * g2)))
    else:
        enc = certify.RootEnclosures(g, nreal)
        lc = g[-1]
        fn = lambda zi, zj: _sphere_values(zi, zj, lc)  # noqa: E731
        (px, py2), enclosure = _pair_values(enc, fn, 2)
        for k in enc.upper_half():
            j = enc.conjugate_of(k)
            found.append((select_root(px, enclosure(k, j, 0)), select_root(py2, enclosure(k, j, 1))))
    out: list[RootDescriptor] = []
    for x, y2 in found:
        y = scalar_sqrt(y2)
        # Every coordinate polynomial is divisible by g, so the reduction
        # vanishes by construction; the exact check is only cheap when the
        # sphere data are rational.
        if not isinstance(x, RealAlgebraic) and not isinstance(y2, RealAlgebraic):
            b, a = reduce_mod_central(p, 2 * x, x * x + y2)
            if not (b.is_zero() and a.is_zero()):
                raise AssertionError("sphere candidate does not vanish identically")
        out.append(Sphere(x, y))
    return out


def _isolated_quadratic(p: OrderedPoly, h: list[int]) -> AlgebraElement:
    h0, h1, h2 = (Fraction(c) for c in h)
    b, a = reduce_mod_central(p, -h1 / h2, h0 / h2)
    r = -alg_mul(a, alg_inv(b))
    if not op_eval(p, r).is_zero():
        raise AssertionError("isolated root candidate is not a zero")
    return r


def _interval_element(q: AlgebraElement, bits: int):
    out = []
    for c in q.coords:
        lo, hi = scalar_enclosure(c, bits)
        out.append(iv.mpf([certify.ival(lo).a, certify.ival(hi).b]))
    return out


def _interval_mul(sig: AlgebraSignature, x, y):
    out = [iv.mpf(0)] * sig.dim
    for i, j, l, c in sig._sparse:
        out[l] = out[l] + x[i] * y[j] * int(c)
    return out


def certify_zero(p: OrderedPoly, r: AlgebraElement, bits: int = 128) -> bool:
    """Interval evaluation of ``p`` at enclosures of ``r`` contains 0 and is narrow."""
    with certify.precision(bits + 64):
        q = _interval_element(r, bits)
        power = [iv.mpf(1)] + [iv.mpf(0)] * (p.sig.dim - 1)
        total = [iv.mpf(0)] * p.sig.dim
        for h, c in enumerate(p.coeffs()):
            if h:
                power = _interval_mul(p.sig, power, q)
            cv = [certify.ival(Fraction(x)) for x in c.coords]
            total = [t + v for t, v in zip(total, _interval_mul(p.sig, power, cv))]
        tol = Fraction(1, 1 << (bits // 4))
        for t in total:
            lo, hi = certify.endpoints(t)
            if not (lo <= 0 <= hi) or hi - lo > tol:
                return False
    return True


def _isolated_general(p: OrderedPoly, h: list[int]) -> list[AlgebraElement]:
    enc = certify.RootEnclosures(h, 0)
    pa = _PairAlgebra(p, h[-1])
    resolvents, enclosure = _pair_values(enc, pa.point, p.sig.dim)
    out = []
    for k in enc.upper_half():
        j = enc.conjugate_of(k)
        coords = [select_root(res, enclosure(k, j, m)) for m, res in enumerate(resolvents)]
        r = p.sig.element(coords)
        if all(not isinstance(c, RealAlgebraic) for c in coords):
            if not op_eval(p, r).is_zero():
                raise AssertionError("isolated root candidate is not a zero")
        elif not _consistent(p, r, enc, k):
            raise AssertionError("isolated root failed interval certification")
        out.append(r)
    return out


def _consistent(p: OrderedPoly, r: AlgebraElement, enc: certify.RootEnclosures, k: int) -> bool:
    """``p(r)`` encloses 0, and ``r`` has the real part and norm of its companion root."""
    if not certify_zero(p, r):
        return False
    z = enc.at(128)[k]
    with certify.precision(192):
        q = _interval_element(r, 128)
        nq = iv.mpf(0)
        for c in q:
            nq = nq + c * c
        zr = z.real
        nz = z.real * z.real + z.imag * z.imag
        return _meet(q[0], zr) and _meet(nq, nz)


def _meet(a, b) -> bool:
    al, ah = certify.endpoints(a)
    bl, bh = certify.endpoints(b)
    return al <= bh and bl <= ah


def solve(p: OrderedPoly) -> RootSet:
    """Isolated points and spheres making up the zero set of ``p``."""
    _check_input(p)
    coord_polys = _coordinate_polys(p)
    g: list[int] = []
    for P in coord_polys:
        Z = upoly.clear_denominators(P)
        if Z:
            g = upoly.zgcd(g, Z) if g else upoly.primitive(Z)
    g = upoly.sqfree(g) if len(g) > 1 else [1]
    c = upoly.sqfree(upoly.clear_denominators(companion(p)))
    h = upoly.exact_div(c, upoly.zgcd(c, g)) if len(g) > 1 else c
    h = upoly.primitive(h)
    if h[-1] < 0:
        h = [-x for x in h]

    descriptors: list[RootDescriptor] = []
    certified: list[str] = []
    if len(g) > 1:
        nreal = count_real_roots(g)
        descriptors += _real_isolated(p, g, coord_polys)
        descriptors += _spheres(p, g, nreal)
    if len(h) == 3:
        descriptors.append(Isolated(_isolated_quadratic(p, h)))
    elif len(h) > 3:
        for r in _isolated_general(p, h):
            descriptors.append(Isolated(r))
            if any(isinstance(x, RealAlgebraic) for x in r.coords):
                certified.append(format_element(r))
    if not descriptors:
        raise AssertionError("nonconstant polynomial with empty zero set")
    return RootSet(descriptors, p, certified)


# -- reports --------------------------------------------------------------------------


def descriptor_to_json(d: RootDescriptor) -> dict:
    if isinstance(d, Sphere):
        return {"type": "sphere", "x": format_scalar(d.x), "y": format_scalar(d.y)}
    return {"type": "point", "coords": [format_scalar(c) for c in d.point.coords]}


def root_report(rs: RootSet) -> dict:
    return {
        "input": format_opoly(rs.input),
        "roots": [descriptor_to_json(d) for d in rs.descriptors],
        "dimension": zero_locus_dimension(rs),
    }


def format_rootset(rs: RootSet) -> str:
    lines = []
    for d in rs.descriptors:
        if isinstance(d, Sphere):
            lines.append(f"sphere x = {format_scalar(d.x)}, y = {format_scalar(d.y)}")
        else:
            lines.append(f"point {format_element(d.point)}")
    lines.append(f"dimension {zero_locus_dimension(rs)}")
    return "\n".join(lines)


__all__ = [
    "Isolated", "Sphere", "RootDescriptor", "RootSet", "solve", "zero_locus_dimension",
    "root_report", "format_rootset", "certify_zero",
]
