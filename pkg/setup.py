"""Build script.  The compiled elimination kernel is optional: if Cython (or a
C compiler) is unavailable the package installs anyway and falls back to the
pure-Python kernel at import time."""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/secohom/linalg/_speedups.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
