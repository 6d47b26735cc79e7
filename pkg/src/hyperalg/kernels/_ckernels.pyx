# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the integer kernels; same contracts as _pykernels."""

BACKEND = "cython"


cpdef list poly_mul(list a, list b):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        x = a[i]
        if x:
            for j in range(nb):
                out[i + j] = out[i + j] + x * b[j]
    while out and not out[len(out) - 1]:
        out.pop()
    return out


cpdef list poly_prem(list a, list b):
    cdef Py_ssize_t db, shift, j, steps, k, nr
    if not b:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    cdef list r = list(a)
    db = len(b) - 1
    lc = b[db]
    alc = abs(lc)
    sgn = 1 if lc > 0 else -1
    steps = len(r) - db
    if steps <= 0:
        return r
    while steps > 0:
        nr = len(r)
        if nr - 1 < db:
            break
        c = r[nr - 1]
        shift = nr - 1 - db
        for k in range(nr):
            r[k] = r[k] * alc
        q = c * sgn
        if q:
            for j in range(db + 1):
                r[shift + j] = r[shift + j] - q * b[j]
        r.pop()
        while r and not r[len(r) - 1]:
            r.pop()
        steps -= 1
    if steps > 0:
        f = alc ** steps
        r = [x * f for x in r]
    return r


cpdef object poly_eval_hom(list a, object num, object den):
    cdef Py_ssize_t i, n = len(a)
    if n == 0:
        return 0
    acc = a[n - 1]
    dpow = 1
    for i in range(n - 2, -1, -1):
        dpow = dpow * den
        acc = acc * num + a[i] * dpow
    return acc


cpdef int sturm_variations(list chain, object num, object den):
    cdef int count = 0, last = 0, s
    cdef list p
    for p in chain:
        v = poly_eval_hom(p, num, den)
        if v:
            s = 1 if v > 0 else -1
            if last and s != last:
                count += 1
            last = s
    return count


cpdef list poly_shift_hom(list a, object num, object den):
    cdef Py_ssize_t n = len(a) - 1, i, k
    cdef list acc, nxt
    if n < 0:
        return []
    acc = [a[n]]
    dpow = 1
    for i in range(n - 1, -1, -1):
        dpow = dpow * den
        nxt = [0] * (len(acc) + 1)
        for k in range(len(acc)):
            c = acc[k]
            nxt[k] = nxt[k] + c * num
            nxt[k + 1] = nxt[k + 1] + c * den
        nxt[0] = nxt[0] + a[i] * dpow
        acc = nxt
    while acc and not acc[len(acc) - 1]:
        acc.pop()
    return acc


cpdef list struct_mul(list a, list b, list table):
    cdef list out = [0] * len(a)
    cdef Py_ssize_t i, j, l
    cdef tuple row
    for row in table:
        i = row[0]
        j = row[1]
        l = row[2]
        x = a[i]
        if x:
            y = b[j]
            if y:
                out[l] = out[l] + row[3] * x * y
    return out
