"""Exact real scalars: rationals and real algebraic numbers.

A scalar is either a :class:`fractions.Fraction` or a :class:`RealAlgebraic`.
A ``RealAlgebraic`` always holds an irrational value; anything rational is
normalised to a ``Fraction`` by every constructor and operation here.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt
from typing import Callable, Sequence, Union

from . import upoly
from .errors import DivisionByZero, ZeroPolynomial

Scalar = Union[Fraction, "RealAlgebraic"]


class RealAlgebraic:
    """Real root of a square-free primitive integer polynomial in an isolating interval.

    Invariants: ``poly`` has positive leading coefficient and no repeated
    roots, ``lo < hi``, ``poly`` does not vanish at either endpoint and has
    exactly one root in between, and that root is irrational.
    """

    __slots__ = ("poly", "lo", "hi", "_slo")

    def __init__(self, poly: Sequence[int], lo, hi, *, _trusted: bool = False):
        self.poly = tuple(poly)
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self._slo = upoly.sign_at(self.poly, self.lo)
        if not _trusted:
            p = list(self.poly)
            if upoly.primitive(p) != p or upoly.sqfree(p) != p or len(p) < 3:
                raise ValueError("minimal polynomial must be primitive, square-free, degree >= 2")
            if not self.lo < self.hi:
                raise ValueError("empty isolating interval")
            if self._slo == 0 or upoly.sign_at(p, self.hi) == 0:
                raise ValueError("interval endpoint is a root")
            if upoly.sturm_count(p, self.lo, self.hi) != 1:
                raise ValueError("interval does not isolate exactly one root")
            if _rational_root(p, self) is not None:
                raise ValueError("value is rational; use Fraction")

    # -- interval refinement -------------------------------------------------

    def refine(self) -> None:
        """Halve the isolating interval."""
        mid = (self.lo + self.hi) / 2
        s = upoly.sign_at(self.poly, mid)
        if s == 0:
            raise ArithmeticError("isolating interval hit a rational root")
        if s == self._slo:
            self.lo = mid
        else:
            self.hi = mid

    def enclosure(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        """Rational bounds ``lo < value < hi`` of width at most ``2**-bits``."""
        w = Fraction(1, 1 << bits) if bits >= 0 else Fraction(1 << -bits)
        while self.hi - self.lo > w:
            self.refine()
        return self.lo, self.hi

    def _exclude(self, x: Fraction) -> None:
        while self.lo <= x <= self.hi:
            self.refine()

    def sign(self) -> int:
        self._exclude(Fraction(0))
        return 1 if self.lo > 0 else -1

    def __float__(self) -> float:
        lo, hi = self.enclosure(60)
        return float((lo + hi) / 2)

    # -- arithmetic ------------------------------------------------------------

    def __neg__(self) -> "RealAlgebraic":
        return RealAlgebraic(upoly.reflect(list(self.poly)), -self.hi, -self.lo, _trusted=True)

    def __pos__(self) -> "RealAlgebraic":
        return self

    def __abs__(self) -> "RealAlgebraic":
        return -self if self.sign() < 0 else self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if isinstance(other, Fraction):
            if not other:
                return self
            return RealAlgebraic(upoly.zshift(list(self.poly), -other), self.lo + other, self.hi + other, _trusted=True)
        return _combine(self, other, "+")

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if isinstance(other, Fraction):
            if not other:
                return Fraction(0)
            if other == 1:
                return self
            a, b = self.lo * other, self.hi * other
            return RealAlgebraic(upoly.zscale(list(self.poly), other), min(a, b), max(a, b), _trusted=True)
        return _combine(self, other, "*")

    __rmul__ = __mul__

    def inverse(self) -> "RealAlgebraic":
        self._exclude(Fraction(0))
        return RealAlgebraic(upoly.reverse(list(self.poly)), 1 / self.hi, 1 / self.lo, _trusted=True)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if isinstance(other, Fraction):
            if not other:
                raise DivisionByZero("division by zero scalar")
            return self * (1 / other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return Fraction(1)
        result: Scalar = Fraction(1)
        base: Scalar = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = square(base)
        return result

    # -- comparison ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, RealAlgebraic):
            return _alg_equal(self, other)
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self) -> int:
        # The defining polynomial is not canonical, so only a constant is safe.
        return 0x5EA1

    def _cmp(self, other) -> int:
        other = _coerce(other)
        if other is NotImplemented:
            raise TypeError("cannot compare")
        return scalar_compare(self, other)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self) -> bool:
        return True

    def __repr__(self) -> str:
        return format_scalar(self)


def _coerce(x):
    if isinstance(x, RealAlgebraic):
        return x
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return NotImplemented


def as_scalar(x) -> Scalar:
    """Convert ints, Fractions, strings or RealAlgebraic values to a scalar."""
    if isinstance(x, (Fraction, RealAlgebraic)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"not a scalar: {x!r}")


def is_rational(x: Scalar) -> bool:
    return not isinstance(x, RealAlgebraic)


def scalar_enclosure(x: Scalar, bits: int = 64) -> tuple[Fraction, Fraction]:
    if isinstance(x, RealAlgebraic):
        return x.enclosure(bits)
    x = Fraction(x)
    return x, x


# -- root selection and canonical form -----------------------------------------


def _rational_root(p: Sequence[int], r: RealAlgebraic) -> Fraction | None:
    """Rational value of the root isolated by ``r`` if it is rational.

    A rational root ``a/b`` of a primitive integer polynomial has ``b | lc``,
    so once the interval is narrower than ``1/lc**2`` at most one candidate
    remains.
    """
    lc = abs(p[-1])
    width = Fraction(1, 2 * lc * lc)
    lo, hi, slo = r.lo, r.hi, r._slo
    while hi - lo >= width:
        mid = (lo + hi) / 2
        s = upoly.sign_at(p, mid)
        if s == 0:
            return mid
        if s == slo:
            lo = mid
        else:
            hi = mid
    r.lo, r.hi = lo, hi
    cand = upoly.simplest_fraction_in(lo, hi)
    if cand.denominator <= lc and upoly.sign_at(p, cand) == 0:
        return cand
    return None


def _canonical(p: Sequence[int], lo: Fraction, hi: Fraction) -> Scalar:
    """Scalar for the unique root of square-free ``p`` strictly inside ``(lo, hi)``."""
    p = list(p)
    if len(p) == 2:
        return Fraction(-p[0], p[1])
    r = RealAlgebraic(p, lo, hi, _trusted=True)
    q = _rational_root(p, r)
    return q if q is not None else r


def _dyadic_outward(lo: Fraction, hi: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Round an interval outward to multiples of ``2**-bits`` (cheap Sturm evaluation points)."""
    scale = 1 << bits
    return (
        Fraction((lo.numerator * scale) // lo.denominator, scale),
        Fraction(-((-hi.numerator * scale) // hi.denominator), scale),
    )


def _narrowed(p: list[int], lo: Fraction, hi: Fraction, interval) -> Scalar:
    """Shrink an isolating interval with one more enclosure so the rational test is cheap."""
    need = 2 * abs(p[-1]).bit_length() + 4
    lo2, hi2 = interval(need)
    lo2, hi2 = _dyadic_outward(lo2, hi2, need + 2)
    for end in (lo2, hi2):
        if lo < end < hi and upoly.sign_at(p, end) == 0:
            return end
    return _canonical(p, max(lo, lo2), min(hi, hi2))


def select_root(p: Sequence[int], interval: Callable[[int], tuple[Fraction, Fraction]]) -> Scalar:
    """Canonical scalar for the root of ``p`` enclosed by ``interval(bits)`` as bits grows.

    ``p`` must be square-free and have the target value as a root.
    """
    p = upoly.sqfree(list(p))
    if len(p) == 2:
        return Fraction(-p[0], p[1])
    bits = 8
    while True:
        lo, hi = interval(bits)
        if lo == hi:
            return lo
        lo, hi = _dyadic_outward(lo, hi, bits + 2)
        if upoly.isolates(p, lo, hi):
            return _narrowed(p, lo, hi, interval)
        # A simple root is eventually isolated by the monotonicity test; the
        # Sturm count is a slower fallback for tight clusters of roots.
        if bits >= 512 and upoly.sign_at(p, lo) and upoly.sign_at(p, hi):
            n = upoly.sturm_count(p, lo, hi)
            if n == 1:
                return _narrowed(p, lo, hi, interval)
            if n == 0:
                raise ArithmeticError("enclosure lost the root")
        bits *= 2
        if bits > 1 << 16:
            raise ArithmeticError("root selection did not converge")


def _combine(a: RealAlgebraic, b: RealAlgebraic, op: str) -> Scalar:
    if op == "+":
        if a == -b:
            return Fraction(0)
        p = upoly.composed_sum(list(a.poly), list(b.poly))

        def interval(bits: int):
            al, ah = a.enclosure(bits)
            bl, bh = b.enclosure(bits)
            return al + bl, ah + bh

    else:
        p = upoly.composed_product(list(a.poly), list(b.poly))

        def interval(bits: int):
            al, ah = a.enclosure(bits)
            bl, bh = b.enclosure(bits)
            c = (al * bl, al * bh, ah * bl, ah * bh)
            return min(c), max(c)

    return select_root(p, interval)


def square(x: Scalar) -> Scalar:
    if not isinstance(x, RealAlgebraic):
        return Fraction(x) ** 2
    p = upoly.graeffe(list(x.poly))

    def interval(bits: int):
        x._exclude(Fraction(0))
        lo, hi = x.enclosure(bits)
        lo, hi = sorted((lo * lo, hi * hi))
        return lo, hi

    return select_root(p, interval)


def _alg_equal(a: RealAlgebraic, b: RealAlgebraic) -> bool:
    if a.hi <= b.lo or b.hi <= a.lo:
        return False
    if a.poly == b.poly:
        return max(a.lo, b.lo) < min(a.hi, b.hi) and _same_root(a, b)
    g = upoly.zgcd(list(a.poly), list(b.poly))
    if len(g) < 2:
        return False
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if lo >= hi:
        return False
    return upoly.sturm_count(g, lo, hi) > 0


def _same_root(a: RealAlgebraic, b: RealAlgebraic) -> bool:
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    return upoly.sturm_count(list(a.poly), lo, hi) > 0


# -- public operations -----------------------------------------------------------


def scalar_compare(a: Scalar, b: Scalar) -> int:
    """Sign of ``a - b`` (-1, 0 or 1), decided exactly."""
    a, b = as_scalar(a), as_scalar(b)
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return (a > b) - (a < b)
    if isinstance(a, Fraction):
        return -scalar_compare(b, a)
    if isinstance(b, Fraction):
        a._exclude(b)
        return 1 if a.lo > b else -1
    if a == b:
        return 0
    while not (a.hi <= b.lo or b.hi <= a.lo):
        a.refine()
        b.refine()
    return 1 if a.lo >= b.hi else -1


_OP_NAMES = {"add": "+", "sub": "-", "mul": "*", "div": "/"}


def scalar_arith(op: str, a: Scalar, b: Scalar) -> Scalar:
    """Apply ``+ - * /`` (or ``add sub mul div``) exactly; raises ``DivisionByZero``."""
    a, b = as_scalar(a), as_scalar(b)
    op = _OP_NAMES.get(op, op)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if is_zero(b):
            raise DivisionByZero("division by zero scalar")
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def is_zero(x: Scalar) -> bool:
    return isinstance(x, Fraction) and x == 0 or (isinstance(x, int) and x == 0)


def scalar_sign(x: Scalar) -> int:
    if isinstance(x, RealAlgebraic):
        return x.sign()
    x = Fraction(x)
    return (x > 0) - (x < 0)


def scalar_sqrt(x: Scalar) -> Scalar:
    """Non-negative square root; raises ``ValueError`` for negative input."""
    x = as_scalar(x)
    if scalar_sign(x) < 0:
        raise ValueError("square root of a negative scalar")
    if isinstance(x, Fraction):
        if x == 0:
            return Fraction(0)
        n, d = x.numerator, x.denominator
        rn, rd = isqrt(n), isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        p = upoly.primitive([-n, 0, d])

        def interval(bits: int):
            return upoly.isqrt_frac_bounds(x, bits)

        return select_root(p, interval)
    p = [0] * (2 * len(x.poly) - 1)
    for k, c in enumerate(x.poly):
        p[2 * k] = c

    def interval_alg(bits: int):
        lo, hi = x.enclosure(2 * bits + 4)
        lo = max(lo, Fraction(0))
        return upoly.isqrt_frac_bounds(lo, bits + 2)[0], upoly.isqrt_frac_bounds(hi, bits + 2)[1]

    return select_root(p, interval_alg)


def isolate_real_roots(coeffs: Sequence) -> list[Scalar]:
    """Distinct real roots, in increasing order, of a nonzero rational polynomial."""
    p = upoly.clear_denominators(coeffs)
    if not p:
        raise ZeroPolynomial("zero polynomial has no isolated roots")
    p = upoly.sqfree(p)
    if len(p) <= 1:
        return []
    rational: list[Fraction] = []
    intervals: list[tuple[Fraction, Fraction]] = []
    B = Fraction(upoly.root_bound(p))
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        n = upoly.sturm_count(p, lo, hi)
        if n == 0:
            continue
        if n == 1:
            intervals.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if upoly.sign_at(p, mid) != 0:
            stack.append((lo, mid))
            stack.append((mid, hi))
            continue
        rational.append(mid)
        d = (hi - lo) / 4
        while True:
            a, b = mid - d, mid + d
            if upoly.sign_at(p, a) and upoly.sign_at(p, b) and upoly.sturm_count(p, a, b) == 1:
                break
            d /= 2
        stack.append((lo, a))
        stack.append((b, hi))
    # Rational roots hit at bisection points are divided out; the isolating
    # intervals may still hold rational roots, which _canonical detects.
    found: list[Scalar] = list(rational)
    for lo, hi in intervals:
        found.append(_canonical(p, lo, hi))
    q = p
    for r in found:
        if isinstance(r, Fraction):
            q = upoly.exact_div(q, upoly.primitive([-r.numerator, r.denominator]))
    out: list[Scalar] = []
    for s in found:
        if isinstance(s, RealAlgebraic) and len(q) < len(s.poly):
            s = RealAlgebraic(q, s.lo, s.hi, _trusted=True)
        out.append(s)
    out.sort(key=_Key)
    return out


class _Key:
    __slots__ = ("s",)

    def __init__(self, s):
        self.s = s

    def __lt__(self, other: "_Key") -> bool:
        return scalar_compare(self.s, other.s) < 0


def count_real_roots(coeffs: Sequence, lo=None, hi=None) -> int:
    """Distinct real roots of a rational polynomial in ``(lo, hi]`` (default: all)."""
    p = upoly.sqfree(upoly.clear_denominators(coeffs))
    if len(p) <= 1:
        return 0
    B = Fraction(upoly.root_bound(p))
    lo = -B if lo is None else Fraction(lo)
    hi = B if hi is None else Fraction(hi)
    return upoly.sturm_count(p, lo, hi)


def poly_sign_at(coeffs: Sequence, x: Scalar) -> int:
    """Exact sign of a rational polynomial evaluated at a scalar."""
    p = upoly.clear_denominators(coeffs)
    if not p:
        return 0
    if not isinstance(x, RealAlgebraic):
        return _rational_poly_sign(coeffs, Fraction(x))
    g = upoly.zgcd(p, list(x.poly))
    if len(g) >= 2 and upoly.sturm_count(g, x.lo, x.hi) > 0:
        return 0
    q = upoly.sqfree(p)
    while not upoly.sign_at(q, x.lo) or upoly.sturm_count(q, x.lo, x.hi) > 0:
        x.refine()
    return _rational_poly_sign(coeffs, x.lo)


def _rational_poly_sign(coeffs: Sequence, x: Fraction) -> int:
    v = upoly.qeval([Fraction(c) for c in coeffs], Fraction(x))
    return (v > 0) - (v < 0)


# -- text form ---------------------------------------------------------------------

_ALG_RE = re.compile(r"^\s*alg\(\s*\[([^\]]*)\]\s*,\s*([^,\s]+)\s*,\s*([^,\s)]+)\s*\)\s*$")


def canonical_interval(x: RealAlgebraic) -> tuple[Fraction, Fraction]:
    """The first interval met when bisecting ``[-B, B]`` towards ``x`` on which
    ``x.poly`` changes sign and is monotone.

    It depends only on the polynomial and the root, not on how far ``x`` has
    been refined, so printed values are stable.
    """
    p = x.poly
    b = Fraction(1 << (upoly.root_bound(p) - 1).bit_length())
    a = -b
    while True:
        if upoly.isolates(p, a, b):
            return a, b
        mid = (a + b) / 2
        x._exclude(mid)
        if x.hi < mid:
            b = mid
        else:
            a = mid


def format_scalar(x: Scalar) -> str:
    """``p/q`` (or ``p``) for rationals, ``alg([c0, ..., cn], lo, hi)`` otherwise.

    Coefficients of the defining polynomial are listed from the constant term up.
    """
    if isinstance(x, RealAlgebraic):
        cs = ", ".join(str(c) for c in x.poly)
        lo, hi = canonical_interval(x)
        return f"alg([{cs}], {lo}, {hi})"
    return str(Fraction(x))


def parse_scalar(text: str) -> Scalar:
    m = _ALG_RE.match(text)
    if m:
        coeffs = [int(c) for c in m.group(1).split(",") if c.strip()]
        lo, hi = Fraction(m.group(2)), Fraction(m.group(3))
        p = upoly.primitive(coeffs)
        if upoly.sqfree(p) != p:
            raise ValueError("defining polynomial is not square-free")
        if not lo < hi or not upoly.sign_at(p, lo) or not upoly.sign_at(p, hi):
            raise ValueError("bad isolating interval")
        if upoly.sturm_count(p, lo, hi) != 1:
            raise ValueError("interval does not isolate exactly one root")
        return _canonical(p, lo, hi)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad scalar literal {text!r}") from exc
