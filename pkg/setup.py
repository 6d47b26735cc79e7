"""Build hook for the optional Cython kernels; metadata lives in pyproject.toml."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    pass
else:
    ext_modules = cythonize(
        ["src/hyperalg/kernels/_ckernels.pyx"],
        compiler_directives={"language_level": 3},
        quiet=True,
    )

setup(ext_modules=ext_modules)
