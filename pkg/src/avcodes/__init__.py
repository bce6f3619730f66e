"""Affine-variety codes over finite fields and their Groebner-basis decoders."""

from .gf import FieldElement, FieldSpec, make_field, pinned_field
from .mpoly import Ring, SparsePoly, parse_poly, format_poly

__all__ = [
    "FieldElement",
    "FieldSpec",
    "make_field",
    "pinned_field",
    "Ring",
    "SparsePoly",
    "parse_poly",
    "format_poly",
]
