"""Exact linear algebra with a compiled hot kernel and a pure fallback.

The elimination kernel is selected once at import: the Cython extension
``_speedups`` when it built, else ``_pure``.  Set SECOHOM_PURE=1 to force the
fallback (used by the benchmark and the kernel-equivalence tests).
"""

import os

if os.environ.get("SECOHOM_PURE"):
    from secohom.linalg import _pure as _kernel
else:
    try:
        from secohom.linalg import _speedups as _kernel  # type: ignore
    except ImportError:
        from secohom.linalg import _pure as _kernel


def kernel_name():
    return _kernel.KERNEL_NAME


from secohom.linalg.matrix import (  # noqa: E402
    Matrix,
    Subspace,
    column_space,
    nullspace,
    quotient_dim,
    rank,
    row_space,
    rref,
    solve,
)

__all__ = [
    "Matrix",
    "Subspace",
    "column_space",
    "kernel_name",
    "nullspace",
    "quotient_dim",
    "rank",
    "row_space",
    "rref",
    "solve",
]
