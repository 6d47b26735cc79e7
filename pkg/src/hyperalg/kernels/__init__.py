"""Hot integer kernels with a compiled core and a pure-Python fallback.

The compiled module is used when it imports cleanly, unless the
environment variable ``HYPERALG_PURE_PYTHON`` is set to a non-empty value.
"""

from __future__ import annotations

import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("HYPERALG_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend

BACKEND: str = _active.BACKEND
poly_mul = _active.poly_mul
poly_prem = _active.poly_prem
poly_eval_hom = _active.poly_eval_hom
sturm_variations = _active.sturm_variations
poly_shift_hom = _active.poly_shift_hom
struct_mul = _active.struct_mul

__all__ = [
    "BACKEND",
    "compiled_backend",
    "python_backend",
    "poly_mul",
    "poly_prem",
    "poly_eval_hom",
    "sturm_variations",
    "poly_shift_hom",
    "struct_mul",
]
