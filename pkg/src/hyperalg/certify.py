"""Certified numerics for complex roots of integer polynomials.

Root enclosures come from approximate roots refined into inclusion disks:
with Weierstrass corrections ``W_i = f(w_i) / (lc * prod_{j != i}(w_i - w_j))``
the disks ``D(w_i, n|W_i|)`` cover the roots, and when they are pairwise
disjoint each holds exactly one root. All bounds are evaluated in mpmath
interval arithmetic.

Symmetric functions of root pairs are turned into exact integer polynomials
("pair resolvents") by expanding ``prod_{i<j} (d_ij u - n_ij)`` over interval
enclosures and rounding coefficients once each interval pins a unique integer.
"""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction
from typing import Sequence

import mpmath
from mpmath import iv, mp
from mpmath.libmp import to_rational

MAX_PREC = 1 << 15


@contextmanager
def precision(bits: int):
    """Set mpmath real and interval working precision for a block."""
    old_mp, old_iv = mp.prec, iv.prec
    mp.prec, iv.prec = bits, bits
    try:
        yield
    finally:
        mp.prec, iv.prec = old_mp, old_iv


def ival(x) -> "iv.mpf":
    """Tight interval around an int or Fraction."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return iv.mpf(x.numerator)
        return iv.mpf(x.numerator) / x.denominator
    return iv.mpf(x)


def endpoints(x) -> tuple[Fraction, Fraction]:
    """Exact rational endpoints of a real interval."""
    a, b = x._mpi_
    return _frac(a), _frac(b)


def _frac(raw) -> Fraction:
    p, q = to_rational(raw)
    return Fraction(int(p), int(q))


def contains_zero(x) -> bool:
    lo, hi = endpoints(x)
    return lo <= 0 <= hi


def cabs_upper(z) -> Fraction:
    return endpoints(abs(z))[1]


def cabs_lower(z) -> Fraction:
    return endpoints(abs(z))[0]


def _is_zero_box(z) -> bool:
    return contains_zero(z.real) and contains_zero(z.imag)


def round_integer(z) -> int | None:
    """The unique integer in a complex interval with zero imaginary part allowed, or ``None``."""
    im = z.imag
    if not contains_zero(im):
        return None
    lo, hi = endpoints(z.real)
    a = -((-lo.numerator) // lo.denominator)  # ceil
    b = hi.numerator // hi.denominator  # floor
    return int(a) if a == b else None


# -- root enclosures ------------------------------------------------------------------


def _horner(coeffs: Sequence[int], z):
    acc = iv.mpc(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _approx_roots(coeffs: Sequence[int], prec: int) -> list:
    desc = [int(c) for c in reversed(coeffs)]
    steps = 50
    while True:
        try:
            return mp.polyroots(desc, maxsteps=steps, extraprec=prec)
        except mpmath.libmp.NoConvergence:
            steps *= 4
            if steps > 5000:
                raise


def root_disks(coeffs: Sequence[int], prec: int) -> list | None:
    """Pairwise disjoint complex boxes, each holding exactly one root of square-free ``coeffs``.

    Returns ``None`` when the disks at this precision overlap.
    """
    n = len(coeffs) - 1
    with precision(prec):
        approx = _approx_roots(coeffs, prec)
        centers = [iv.mpc(iv.mpf(w.real), iv.mpf(w.imag)) for w in approx]
        lc = int(coeffs[-1])
        radii: list[Fraction] = []
        for i, w in enumerate(centers):
            num = _horner(coeffs, w)
            den = iv.mpc(lc)
            for j, v in enumerate(centers):
                if j != i:
                    den = den * (w - v)
            low = cabs_lower(den)
            if low <= 0:
                return None
            radii.append(n * cabs_upper(num) / low)
        for i in range(n):
            for j in range(i + 1, n):
                gap = cabs_lower(centers[i] - centers[j])
                if gap <= radii[i] + radii[j]:
                    return None
        boxes = []
        for w, r in zip(approx, radii):
            re, im = _frac(w.real._mpf_), _frac(w.imag._mpf_)
            boxes.append(
                iv.mpc(iv.mpf([ival(re - r).a, ival(re + r).b]), iv.mpf([ival(im - r).a, ival(im + r).b]))
            )
        return boxes


def box_center(z) -> complex:
    lo_r, hi_r = endpoints(z.real)
    lo_i, hi_i = endpoints(z.imag)
    return complex(float((lo_r + hi_r) / 2), float((lo_i + hi_i) / 2))


def box_width(z) -> Fraction:
    lo_r, hi_r = endpoints(z.real)
    lo_i, hi_i = endpoints(z.imag)
    return max(hi_r - lo_r, hi_i - lo_i)


def imag_sign(z) -> int:
    """+1 / -1 when the box lies strictly above / below the real axis, else 0."""
    lo, hi = endpoints(z.imag)
    return 1 if lo > 0 else -1 if hi < 0 else 0


def boxes_meet(a, b) -> bool:
    ar, br = endpoints(a.real), endpoints(b.real)
    ai, bi = endpoints(a.imag), endpoints(b.imag)
    return ar[0] <= br[1] and br[0] <= ar[1] and ai[0] <= bi[1] and bi[0] <= ai[1]


class RootEnclosures:
    """Consistently indexed root boxes of a square-free integer polynomial at growing precision.

    ``nreal`` is the exact number of real roots; a precision is accepted only
    when every other box avoids the real axis.
    """

    def __init__(self, coeffs: Sequence[int], nreal: int, prec: int = 64):
        self.coeffs = [int(c) for c in coeffs]
        self.nreal = nreal
        self.prec = prec
        self.boxes = self._compute(prec)

    def _compute(self, prec: int) -> list:
        while prec <= MAX_PREC:
            boxes = root_disks(self.coeffs, prec)
            if boxes is not None:
                off = sum(1 for b in boxes if imag_sign(b) != 0)
                if off == len(boxes) - self.nreal:
                    self.prec = prec
                    return boxes
            prec *= 2
        raise ArithmeticError("root enclosures did not separate")

    def at(self, prec: int) -> list:
        """Boxes at precision at least ``prec``, in the original root order."""
        if prec <= self.prec:
            return self.boxes
        while self.prec < prec:
            new = root_disks(self.coeffs, self.prec * 2)
            self.prec *= 2
            if new is None:
                continue
            order = []
            for old in self.boxes:
                match = [k for k, b in enumerate(new) if boxes_meet(old, b)]
                if len(match) != 1:
                    break
                order.append(new[match[0]])
            else:
                self.boxes = order
        return self.boxes

    def upper_half(self) -> list[int]:
        return [k for k, b in enumerate(self.boxes) if imag_sign(b) > 0]

    def conjugate_of(self, k: int) -> int:
        z = self.boxes[k]
        c = iv.mpc(z.real, -z.imag)
        match = [j for j, b in enumerate(self.boxes) if j != k and boxes_meet(c, b)]
        if len(match) != 1:
            raise ArithmeticError("conjugate root not identified")
        return match[0]


# -- pair resolvents ------------------------------------------------------------------


def magnitude_bits(zs: Sequence) -> int:
    """Bit length of the largest absolute value among complex intervals."""
    top = max((cabs_upper(z) for z in zs), default=Fraction(0))
    return max(1, int(top).bit_length())


def resolvent(pairs: Sequence[tuple[object, object]], need: list[int] | None = None) -> list[int] | None:
    """Integer coefficients of ``prod (d u - n)`` over interval pairs ``(n, d)``.

    The pairs must range over all unordered root pairs of an integer
    polynomial, with ``n`` and ``d`` symmetric integer polynomials in the
    (algebraic integer) roots, so the product has integer coefficients.
    Returns ``None`` if the interval expansion is too wide to round at the
    current precision; the bit size of the coefficients is then appended to
    ``need`` so the caller can pick a sufficient precision.

    Factors whose ``n`` and ``d`` enclosures both contain 0 are left out.
    Exactly vanishing pairs form a Galois-stable set, so the remaining
    product is still integral; a factor left out wrongly makes the product
    non-integral, rounding fails and the caller retries at higher precision.
    """
    poly = [iv.mpc(1)]
    for n, d in pairs:
        if _is_zero_box(n) and _is_zero_box(d):
            continue
        out = [iv.mpc(0)] * (len(poly) + 1)
        for k, c in enumerate(poly):
            out[k] = out[k] - c * n
            out[k + 1] = out[k + 1] + c * d
        poly = out
    ints = []
    for c in poly:
        r = round_integer(c)
        if r is None:
            if need is not None:
                need.append(magnitude_bits(poly))
            return None
        ints.append(r)
    while len(ints) > 1 and ints[-1] == 0:
        ints.pop()
    return ints


def real_enclosure(z) -> tuple[Fraction, Fraction]:
    return endpoints(z.real)
