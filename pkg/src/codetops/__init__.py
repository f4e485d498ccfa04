"""Tops of the graph of non-degenerate linear codes over finite fields."""
from .field import FieldElement, FieldSpec, all_elements, field_of_order, frobenius, make_field
from .kernels import BACKEND
from .matspace import MatrixGF, Subspace

__all__ = [
    "BACKEND",
    "FieldElement",
    "FieldSpec",
    "MatrixGF",
    "Subspace",
    "all_elements",
    "field_of_order",
    "frobenius",
    "make_field",
]
__version__ = "0.1.0"
