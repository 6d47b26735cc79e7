"""Independent reference computations used only by the tests.

None of these import the package's arithmetic: they work on plain ints,
Fractions, floats and numpy arrays so that a shared bug cannot make a test
agree with itself.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

# -- exact univariate helpers (ascending coefficient lists) ---------------------------


def peval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sylvester_resultant(f: list, g: list) -> Fraction:
    """Res(f, g) as the determinant of the Sylvester matrix (Gaussian elimination over Q)."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    fd, gd = list(reversed(f)), list(reversed(g))  # descending
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in fd] + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in gd] + [Fraction(0)] * (size - n - 1 - i))
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col]:
                f_ = rows[r][col] / rows[col][col]
                rows[r] = [a - f_ * b for a, b in zip(rows[r], rows[col])]
    return det


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod(a, b):
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(_trim(a)) >= len(b):
        a = _trim(a)
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
    return q, _trim(a)


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    return a


def squarefree(p):
    dp = [i * c for i, c in enumerate(p)][1:]
    g = _gcd(p, dp)
    return _divmod(p, g)[0] if len(g) > 1 else [Fraction(c) for c in p]


def _taylor_shift(p, a):
    """Coefficients of p(x + a)."""
    out = [Fraction(c) for c in p]
    n = len(out)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            out[j] += a * out[j + 1]
    return out


def _variations(cs) -> int:
    signs = [c > 0 for c in cs if c != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def _descartes_01(p) -> int:
    """Descartes bound for roots of p in (0, 1): variations of (1+x)^n p(1/(1+x))."""
    rev = list(reversed(p))
    return _variations(_taylor_shift(rev, 1))


def bisection_root_count(p: list[int]) -> int:
    """Distinct real roots by Descartes-rule bisection (Vincent, Collins and Akritas)."""
    p = squarefree(p)
    if len(p) <= 1:
        return 0
    bound = 1 + max(abs(Fraction(c) / p[-1]) for c in p[:-1])
    count = 0
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        # q(t) = p(lo + (hi - lo) t) on (0, 1)
        q = _taylor_shift(p, lo)
        w = hi - lo
        q = [c * w**i for i, c in enumerate(q)]
        v = _descartes_01(q)
        if v == 0:
            continue
        if v == 1:
            count += 1
            continue
        mid = (lo + hi) / 2
        if peval(p, mid) == 0:
            count += 1
        stack += [(lo, mid), (mid, hi)]
    return count + (1 if peval(p, -bound) == 0 else 0)


# -- floating-point quaternions ----------------------------------------------------------


def hamilton(a, b) -> np.ndarray:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return np.array(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ]
    )


def float_quat_poly(coeffs, q) -> np.ndarray:
    """sum q^h a_h in double precision; ``coeffs`` are 4-vectors, ascending."""
    out = np.zeros(4)
    power = np.array([1.0, 0.0, 0.0, 0.0])
    for a in coeffs:
        out = out + hamilton(power, a)
        power = hamilton(power, q)
    return out


def companion_float(coeffs) -> np.ndarray:
    """Real coefficients (ascending) of p * conj(p) for quaternion 4-vectors."""
    n = len(coeffs)
    conj = [np.array([a[0], -a[1], -a[2], -a[3]]) for a in coeffs]
    out = np.zeros(2 * n - 1)
    for i in range(n):
        for j in range(n):
            out[i + j] += hamilton(coeffs[i], conj[j])[0]
    return out


def companion_root_clusters(coeffs, tol: float = 1e-5) -> tuple[int, float]:
    """Number of root classes of a quaternion polynomial predicted by numpy.

    Complex roots of the companion polynomial are clustered (multiplicity
    merges), each conjugate pair counted once; returns (classes, worst
    relative residual of the companion at the numeric roots).
    """
    c = companion_float(coeffs)
    roots = np.roots(c[::-1])
    scale = np.sum(np.abs(c)) * max(1.0, float(np.max(np.abs(roots))) ** (len(c) - 1)) if len(roots) else 1.0
    residual = max((abs(np.polyval(c[::-1], r)) / scale for r in roots), default=0.0)
    upper = [r for r in roots if r.imag > -1e-6]
    classes: list[complex] = []
    for r in upper:
        if all(abs(r - s) > tol for s in classes):
            classes.append(r)
    return len(classes), residual
