from __future__ import annotations

import numpy as np
import pytest

from phasevault.core.exceptions import LengthMismatch, ParseError
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
from phasevault.field.core import FieldContext


def test_gf4_dual_of_polynomial_basis(gf4: FieldContext) -> None:
    polynomial = Basis.polynomial(gf4)
    assert polynomial.labels == ["s^0", "s^1"]
    assert dual_basis(polynomial).labels == ["s^2", "s^0"]


def test_gf4_normal_basis_is_selfdual(gf4: FieldContext) -> None:
    normal = Basis.normal(gf4)
    assert normal.labels == ["s^1", "s^2"]
    assert normal.is_selfdual
    assert find_selfdual_basis(gf4).labels == ["s^1", "s^2"]


def test_gf8_dual_has_identity_gram(gf8: FieldContext) -> None:
    polynomial = Basis.polynomial(gf8)
    dual = polynomial.dual
    mixed = gf8.pair_trace(np.array(polynomial.codes)[:, None], np.array(dual.codes)[None, :])
    np.testing.assert_array_equal(mixed, np.eye(3, dtype=np.int64))


def test_gf8_selfdual_basis(gf8: FieldContext) -> None:
    basis = find_selfdual_basis(gf8)
    assert basis.kind is BasisKind.SELFDUAL
    assert basis.labels == ["s^3", "s^5", "s^6"]
    np.testing.assert_array_equal(gram_matrix(basis), np.eye(3, dtype=np.int64))


def test_gf27_custom_basis_is_detected_selfdual(gf27: FieldContext) -> None:
    basis = Basis.custom(gf27, ["s^1", "s^3", "s^9"])
    assert basis.kind is BasisKind.SELFDUAL
    assert basis.dual is basis


def test_gf9_has_only_an_almost_selfdual_basis(gf9: FieldContext) -> None:
    basis = find_selfdual_basis(gf9)
    assert basis.kind is BasisKind.ALMOST_SELFDUAL
    assert basis.labels == ["s^2", "s^4"]
    np.testing.assert_array_equal(basis.gram, np.diag([1, 2]))


def test_expand_compose_inverse(gf27: FieldContext) -> None:
    basis = Basis.custom(gf27, ["s^1", "s^3", "s^9"])
    for element in gf27.elements():
        assert compose(expand(element, basis), basis) == element


def test_dependent_elements_are_rejected(gf9: FieldContext) -> None:
    with pytest.raises(ValueError):
        Basis.custom(gf9, ["s^1", "s^5"])


def test_wrong_number_of_elements(gf8: FieldContext) -> None:
    with pytest.raises(LengthMismatch):
        Basis.custom(gf8, ["s^0", "s^1"])


@pytest.mark.parametrize("text, code", [("0", 0), ("s", 2), ("s^1", 2), ("σ^2", 3), ("s^-1", 3), ("(1,1)", 3)])
def test_parse_element(gf4: FieldContext, text: str, code: int) -> None:
    assert parse_element(text, gf4).code == code


def test_parse_element_in_a_basis(gf4: FieldContext) -> None:
    normal = Basis.normal(gf4)
    assert parse_element("(1,0)", gf4, normal) == gf4.sigma


def test_parse_element_rejects_garbage(gf4: FieldContext) -> None:
    with pytest.raises(ParseError):
        parse_element("t^2", gf4)
