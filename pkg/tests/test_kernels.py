import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperalg import kernels
from hyperalg.algebra import OCTONION, QUATERNION
from hyperalg.kernels import compiled_backend, python_backend

needs_compiled = pytest.mark.skipif(compiled_backend is None, reason="compiled kernels not built")

ints = st.integers(-(2**70), 2**70)
polys = st.lists(ints, min_size=1, max_size=12).map(lambda p: p[:-1] + [p[-1] or 1])
dens = st.integers(1, 10**6)


def peval(p, x):
    return sum(Fraction(c) * x**n for n, c in enumerate(p))


def test_fallback_basics():
    assert python_backend.poly_mul([1, 1], [-1, 1]) == [-1, 0, 1]
    assert python_backend.poly_eval_hom([1, 0, 1], 1, 2) == 5
    assert python_backend.poly_shift_hom([0, 0, 1], 1, 1) == [1, 2, 1]


@given(polys, st.integers(-1000, 1000), dens)
def test_fallback_matches_fractions(p, num, den):
    x = Fraction(num, den)
    n = len(p) - 1
    assert python_backend.poly_eval_hom(p, num, den) == peval(p, x) * den**n
    shifted = python_backend.poly_shift_hom(p, num, den)
    for t in (Fraction(0), Fraction(3, 7)):
        assert peval(shifted, t) == peval(p, t + x) * den**n


@given(polys, polys)
def test_prem_identity(a, b):
    if len(b) > len(a):
        a, b = b, a
    r = python_backend.poly_prem(a, b)
    assert len(r) < len(b) or not any(r)
    # |lc(b)|^e * a - r is a multiple of b, so its own remainder is zero
    diff = [abs(b[-1]) ** (len(a) - len(b) + 1) * c for c in a]
    for n, c in enumerate(r):
        diff[n] -= c
    assert not any(python_backend.poly_prem(diff, b))


@needs_compiled
@given(polys, polys, st.integers(-(10**9), 10**9), dens)
def test_backends_agree(a, b, num, den):
    for name, args in [
        ("poly_mul", (a, b)),
        ("poly_prem", (a, b)),
        ("poly_eval_hom", (a, num, den)),
        ("poly_shift_hom", (a, num, den)),
        ("sturm_variations", ([a, b], num, den)),
    ]:
        assert getattr(compiled_backend, name)(*args) == getattr(python_backend, name)(*args), name


@needs_compiled
@given(st.lists(ints, min_size=8, max_size=8), st.lists(ints, min_size=8, max_size=8))
def test_struct_mul_agrees(x, y):
    for sig in (QUATERNION, OCTONION):
        rows = list(sig._int_table[0])
        k = sig.dim
        assert compiled_backend.struct_mul(x[:k], y[:k], rows) == python_backend.struct_mul(x[:k], y[:k], rows)


def test_backend_selection():
    assert kernels.BACKEND in ("cython", "python")
    env = dict(os.environ, HYPERALG_PURE_PYTHON="1")
    proc = subprocess.run(
        [sys.executable, "-c", "from hyperalg import kernels; print(kernels.BACKEND, kernels.compiled_backend)"],
        capture_output=True, text=True, env=env,
    )
    assert proc.stdout.split() == ["python", "None"]
