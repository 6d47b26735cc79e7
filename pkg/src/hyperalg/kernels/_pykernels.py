"""Pure-Python reference implementations of the hot integer kernels.

Polynomials are lists of ints in ascending order of degree with no
trailing zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

BACKEND = "python"


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and not out[-1]:
        out.pop()
    return out


def poly_prem(a: list[int], b: list[int]) -> list[int]:
    """Remainder of ``|lc(b)|**(deg a - deg b + 1) * a`` divided by ``b``.

    The multiplier is positive, so signs survive (needed for Sturm chains).
    """
    if not b:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    alc = abs(lc)
    sgn = 1 if lc > 0 else -1
    steps = len(r) - db
    if steps <= 0:
        return r
    for _ in range(steps):
        if len(r) - 1 < db:
            break
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * alc for x in r]
        q = c * sgn
        if q:
            for j in range(db + 1):
                r[shift + j] -= q * b[j]
        r.pop()
        while r and not r[-1]:
            r.pop()
        steps -= 1
    if steps > 0:
        f = alc ** steps
        r = [x * f for x in r]
    return r


def poly_eval_hom(a: list[int], num: int, den: int) -> int:
    """``den**deg(a) * a(num/den)``; ``den`` must be positive."""
    n = len(a)
    if n == 0:
        return 0
    acc = a[-1]
    dpow = 1
    for i in range(n - 2, -1, -1):
        dpow *= den
        acc = acc * num + a[i] * dpow
    return acc


def sturm_variations(chain: list[list[int]], num: int, den: int) -> int:
    """Sign variations of a polynomial chain evaluated at ``num/den``."""
    count = 0
    last = 0
    for p in chain:
        v = poly_eval_hom(p, num, den)
        if v:
            s = 1 if v > 0 else -1
            if last and s != last:
                count += 1
            last = s
    return count


def poly_shift_hom(a: list[int], num: int, den: int) -> list[int]:
    """Coefficients of ``den**n * a(x + num/den)`` for ``n = deg a``."""
    n = len(a) - 1
    if n < 0:
        return []
    # Horner in the ring Z[x]: acc <- acc * (den*x + num) + a_i * den**(n-i)
    acc = [a[-1]]
    dpow = 1
    for i in range(n - 1, -1, -1):
        dpow *= den
        nxt = [0] * (len(acc) + 1)
        for k, c in enumerate(acc):
            nxt[k] += c * num
            nxt[k + 1] += c * den
        nxt[0] += a[i] * dpow
        acc = nxt
    while acc and not acc[-1]:
        acc.pop()
    return acc


def struct_mul(
    a: list[int], b: list[int], table: list[tuple[int, int, int, int]]
) -> list[int]:
    """Bilinear product ``out[l] += a[i] * b[j] * c`` over sparse table rows."""
    out = [0] * len(a)
    for i, j, l, c in table:
        x = a[i]
        if x:
            y = b[j]
            if y:
                out[l] += c * x * y
    return out
