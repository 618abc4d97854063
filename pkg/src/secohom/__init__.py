"""secohom: exact secondary Hochschild cohomology of finite-dimensional
triples (A, B, eps), with cup/bracket operations, Hodge decomposition,
square-zero extensions, and the comparison map to ordinary Hochschild
cohomology."""

__version__ = "0.1.0"

from secohom.fields import GF, QQ
from secohom.linalg import kernel_name

__all__ = ["GF", "QQ", "kernel_name", "__version__"]
