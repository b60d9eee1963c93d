"""Exact cochain models of free loop spaces, their homotopy orbits and mod-2 TC.

Subpackages: ``core`` (integer complexes and Smith form), ``dga`` (bar,
cobar, twisting cochains), ``loops`` (fls, hos, tc and the twisted
extension), ``circle`` (cubical chains on the circle and the orbit complex).
"""

from .core import HomologyGroup, TruncatedComplex
from .dga import PresentedAlgebra, sphere, truncated_polynomial, wedge
from .loops import build_model

__version__ = "0.1.0"

__all__ = [
    "HomologyGroup",
    "PresentedAlgebra",
    "TruncatedComplex",
    "__version__",
    "build_model",
    "sphere",
    "truncated_polynomial",
    "wedge",
]
