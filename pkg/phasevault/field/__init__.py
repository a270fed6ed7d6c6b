from phasevault.field.basis import (
    Basis,
    BasisKind,
    compose,
    dual_basis,
    expand,
    find_selfdual_basis,
    gram_matrix,
    parse_element,
)
from phasevault.field.core import FieldContext, FieldElement, add, character, invert, make_field, mul, trace
from phasevault.field.ordering import element_ordering
from phasevault.field.polynomial import Polynomial, parse_polynomial

__all__ = [
    "Basis",
    "BasisKind",
    "FieldContext",
    "FieldElement",
    "Polynomial",
    "add",
    "character",
    "compose",
    "dual_basis",
    "element_ordering",
    "expand",
    "find_selfdual_basis",
    "gram_matrix",
    "invert",
    "make_field",
    "mul",
    "parse_element",
    "parse_polynomial",
    "trace",
]
