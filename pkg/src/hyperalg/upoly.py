"""Dense univariate polynomials over Z and Q.

Polynomials are lists of coefficients in ascending degree order with no
trailing zeros; ``[]`` is the zero polynomial. Integer routines go through
:mod:`hyperalg.kernels` for the inner loops.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt
from typing import Sequence

from . import kernels

ZPoly = list[int]
QPoly = list[Fraction]


def strip(p: Sequence) -> list:
    out = list(p)
    while out and not out[-1]:
        out.pop()
    return out


def degree(p: Sequence) -> int:
    return len(p) - 1


def add(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    return strip(out)


def sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return strip(out)


def scale(a: Sequence, c) -> list:
    return strip([c * x for x in a]) if c else []


def mul(a: Sequence, b: Sequence) -> list:
    """Product; integer inputs use the kernel, anything else the generic loop."""
    if all(type(x) is int for x in a) and all(type(x) is int for x in b):
        return kernels.poly_mul(list(a), list(b))
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return strip(out)


def derivative(p: Sequence) -> list:
    return strip([i * p[i] for i in range(1, len(p))])


def content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def primitive(p: Sequence[int]) -> ZPoly:
    """Primitive part with positive leading coefficient."""
    p = strip(p)
    if not p:
        return []
    g = content(p)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def clear_denominators(p: Sequence) -> ZPoly:
    """Primitive integer polynomial proportional to a rational one."""
    p = strip(p)
    if not p:
        return []
    den = 1
    for c in p:
        d = Fraction(c).denominator
        den = den * d // gcd(den, d)
    return primitive([int(Fraction(c) * den) for c in p])


def qdivmod(a: Sequence, b: Sequence) -> tuple[QPoly, QPoly]:
    """Euclidean division over Q."""
    b = strip(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = [Fraction(c) for c in strip(a)]
    lc = Fraction(b[-1])
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    q = [Fraction(0)] * (len(r) - db)
    while r and len(r) - 1 >= db:
        c = r[-1] / lc
        shift = len(r) - 1 - db
        q[shift] = c
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        r = strip(r)
    return strip(q), r


def exact_div(a: Sequence[int], b: Sequence[int]) -> ZPoly:
    """Quotient ``a / b`` in Z[x]; raises if the division is not exact."""
    q, r = qdivmod(a, b)
    if r or any(c.denominator != 1 for c in q):
        raise ArithmeticError("inexact polynomial division")
    return [int(c) for c in q]


def prem(a: Sequence[int], b: Sequence[int]) -> ZPoly:
    return kernels.poly_prem(list(a), list(b))


_PRIMES = (2**61 - 1, 2**31 - 1, 1_000_000_007, 998_244_353)


def _gcd_degree_mod(a: Sequence[int], b: Sequence[int], m: int) -> int:
    """Degree of gcd(a mod m, b mod m) over GF(m); -1 if a reduction loses its degree."""
    x = strip([c % m for c in a])
    y = strip([c % m for c in b])
    if len(x) != len(a) or len(y) != len(b):
        return -1
    while y:
        inv = pow(y[-1], -1, m)
        while len(x) >= len(y):
            f = x[-1] * inv % m
            off = len(x) - len(y)
            for k, c in enumerate(y):
                x[off + k] = (x[off + k] - f * c) % m
            x = strip(x)
        x, y = y, x
    return len(x) - 1


def coprime(a: Sequence[int], b: Sequence[int]) -> bool | None:
    """``True`` when a modular image already proves ``gcd(a, b) = 1``; ``None`` if undecided.

    When the reductions keep both degrees, the gcd over the prime field has
    degree at least that of the gcd over Q, so a constant image is a proof.
    """
    for m in _PRIMES:
        d = _gcd_degree_mod(a, b, m)
        if d == 0:
            return True
    return None


def zgcd(a: Sequence[int], b: Sequence[int]) -> ZPoly:
    """Primitive gcd in Z[x] by the primitive remainder sequence."""
    a, b = primitive(a), primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) > 1 and len(b) > 1 and coprime(a, b):
        return [1]
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = prem(a, b)
        a, b = b, primitive(r)
    return primitive(a)


def sqfree(p: Sequence[int]) -> ZPoly:
    """Square-free part, primitive with positive leading coefficient."""
    p = primitive(p)
    if len(p) <= 2:
        return p
    g = zgcd(p, derivative(p))
    if len(g) == 1:
        return p
    return primitive(exact_div(p, g))


def monotone_on(p: Sequence[int], lo: Fraction, hi: Fraction) -> bool:
    """``p'`` provably has no zero on ``[lo, hi]`` (Taylor bound at the midpoint)."""
    dp = derivative(p)
    if len(dp) <= 1:
        return bool(dp)
    m = (lo + hi) / 2
    r = (hi - lo) / 2
    q = kernels.poly_shift_hom(list(dp), m.numerator, m.denominator)
    n = len(q) - 1
    rn, rd = r.numerator, r.denominator
    tail = 0
    for k in range(1, n + 1):
        if q[k]:
            tail += abs(q[k]) * rn**k * rd ** (n - k)
    return abs(q[0]) * rd**n > tail


def isolates(p: Sequence[int], lo: Fraction, hi: Fraction) -> bool:
    """``(lo, hi)`` provably holds exactly one root of ``p``: a sign change and ``p`` monotone."""
    return sign_at(p, lo) * sign_at(p, hi) < 0 and monotone_on(p, lo, hi)


def eval_hom(p: Sequence[int], x: Fraction) -> int:
    """Integer with the sign of ``p(x)`` (``den**deg * p(x)``)."""
    return kernels.poly_eval_hom(list(p), x.numerator, x.denominator)


def sign_at(p: Sequence[int], x: Fraction) -> int:
    v = eval_hom(p, x)
    return (v > 0) - (v < 0)


def qeval(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=4096)
def _sturm_cached(p: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    chain = [list(p), primitive(derivative(p))]
    while True:
        r = prem(chain[-2], chain[-1])
        if not r:
            break
        g = content(r)
        chain.append([-c // g for c in r])
    return tuple(tuple(c) for c in chain)


def sturm_chain(p: Sequence[int]) -> list[list[int]]:
    """Sturm sequence of a square-free integer polynomial (scaled by positive factors)."""
    return [list(c) for c in _sturm_cached(tuple(p))]


def sturm_count(p: Sequence[int], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in ``(lo, hi]`` of a square-free ``p``."""
    if len(p) <= 1:
        return 0
    chain = [list(c) for c in _sturm_cached(tuple(p))]
    lo, hi = Fraction(lo), Fraction(hi)
    return kernels.sturm_variations(chain, lo.numerator, lo.denominator) - kernels.sturm_variations(
        chain, hi.numerator, hi.denominator
    )


def root_bound(p: Sequence[int]) -> int:
    """Integer strictly exceeding the absolute value of every complex root."""
    lc = abs(p[-1])
    m = max((abs(c) for c in p[:-1]), default=0)
    return 1 + -(-m // lc)


def shift(p: Sequence, c) -> list:
    """Coefficients of ``p(x + c)``."""
    c = Fraction(c)
    if all(type(x) is int for x in p):
        q = kernels.poly_shift_hom(list(p), c.numerator, c.denominator)
        dn = c.denominator ** (len(p) - 1)
        return strip([Fraction(x, dn) for x in q])
    out: list = []
    for a in reversed(p):
        out = add(mul(out, [c, 1]), [a])
    return out


def zshift(p: Sequence[int], c: Fraction) -> ZPoly:
    """Primitive integer polynomial whose roots are those of ``p`` minus ``c``."""
    c = Fraction(c)
    return primitive(kernels.poly_shift_hom(list(p), c.numerator, c.denominator))


def zscale(p: Sequence[int], c: Fraction) -> ZPoly:
    """Primitive polynomial whose roots are those of ``p`` times ``c`` (c != 0)."""
    c = Fraction(c)
    n = len(p) - 1
    # q(x) = p(x / c) * c**n  ->  coeff_k = p_k * c**(n-k)
    return clear_denominators([p[k] * c ** (n - k) for k in range(n + 1)])


def reflect(p: Sequence[int]) -> ZPoly:
    """Roots negated."""
    return primitive([c if k % 2 == 0 else -c for k, c in enumerate(p)])


def reverse(p: Sequence[int]) -> ZPoly:
    """Roots inverted (assumes ``p(0) != 0``)."""
    return primitive(list(reversed(strip(p))))


def power_sums(p: Sequence, count: int) -> list[Fraction]:
    """Power sums ``s_0..s_count`` of the roots of ``p`` (Newton identities)."""
    n = len(p) - 1
    lc = Fraction(p[-1])
    c = [Fraction(x) / lc for x in p]  # monic coefficients, c[n] == 1
    s = [Fraction(n)]
    for k in range(1, count + 1):
        acc = Fraction(0)
        for i in range(1, min(k - 1, n) + 1):
            acc += c[n - i] * s[k - i]
        if k <= n:
            acc += k * c[n - k]
        s.append(-acc)
    return s


def from_power_sums(s: Sequence[Fraction], n: int) -> QPoly:
    """Monic polynomial of degree ``n`` with prescribed root power sums."""
    e = [Fraction(1)]
    for k in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            term = e[k - i] * s[i]
            acc += term if i % 2 == 1 else -term
        e.append(acc / k)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = e[k] if k % 2 == 0 else -e[k]
    return coeffs


def composed_sum(p: Sequence[int], q: Sequence[int]) -> ZPoly:
    """Polynomial with roots ``a + b`` over all root pairs (multiset)."""
    n, m = len(p) - 1, len(q) - 1
    N = n * m
    sp, sq = power_sums(p, N), power_sums(q, N)
    s = [Fraction(N)]
    for k in range(1, N + 1):
        acc = Fraction(0)
        for l in range(k + 1):
            acc += comb(k, l) * sp[l] * sq[k - l]
        s.append(acc)
    return clear_denominators(from_power_sums(s, N))


def composed_product(p: Sequence[int], q: Sequence[int]) -> ZPoly:
    """Polynomial with roots ``a * b`` over all root pairs (multiset)."""
    n, m = len(p) - 1, len(q) - 1
    N = n * m
    sp, sq = power_sums(p, N), power_sums(q, N)
    s = [sp[k] * sq[k] for k in range(N + 1)]
    return clear_denominators(from_power_sums(s, N))


def graeffe(p: Sequence[int]) -> ZPoly:
    """Polynomial whose roots are the squares of the roots of ``p``."""
    pm = [c if k % 2 == 0 else -c for k, c in enumerate(p)]
    prod = mul(list(p), pm)
    return primitive(prod[0::2])


def simplest_fraction_in(lo: Fraction, hi: Fraction) -> Fraction:
    """Fraction with the smallest denominator in the closed interval ``[lo, hi]``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_fraction_in(-hi, -lo)
    fl = lo.numerator // lo.denominator
    if Fraction(fl) == lo:
        return lo
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    # lo and hi share the integer part fl and lo is not an integer
    rest = simplest_fraction_in(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / rest


def isqrt_frac_bounds(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational lower and upper bounds for ``sqrt(x)``, ``x >= 0``, width about ``2**-bits``."""
    scale_ = 1 << (2 * bits)
    num = x.numerator * scale_
    den = x.denominator
    # sqrt(num/den) = sqrt(num*den)/den
    r = isqrt(num * den)
    lo = Fraction(r, den << bits)
    hi = Fraction(r + 1, den << bits)
    return lo, hi
