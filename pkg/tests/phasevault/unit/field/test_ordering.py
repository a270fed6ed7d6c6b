from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from phasevault.core.exceptions import ParseError
from phasevault.field.basis import Basis
from phasevault.field.core import FieldContext
from phasevault.field.ordering import element_ordering, packaged_ordering_path, read_ordering_labels


def test_lex_ordering_in_polynomial_basis_is_code_order(gf9: FieldContext) -> None:
    codes = element_ordering(gf9, Basis.polynomial(gf9), "lex")
    # first coordinate most significant: (c0, c1) -> index 3*c0 + c1, code c0 + 3*c1
    assert codes.tolist() == [0, 3, 6, 1, 4, 7, 2, 5, 8]


def test_dlog_ordering(gf4: FieldContext) -> None:
    codes = element_ordering(gf4, Basis.polynomial(gf4), "dlog")
    assert [gf4.element(int(c)).label for c in codes] == ["0", "s^0", "s^1", "s^2"]


def test_packaged_fig2_ordering_is_a_permutation(gf27: FieldContext) -> None:
    assert packaged_ordering_path("fig2").is_file()
    codes = element_ordering(gf27, Basis.custom(gf27, ["s^1", "s^3", "s^9"]), "file", "fig2")
    assert sorted(codes.tolist()) == list(range(27))
    assert gf27.element(int(codes[0])).label == "s^13"
    assert codes[13] == 0


def test_ordering_file_with_comments(tmp_path: Path, gf4: FieldContext) -> None:
    path = tmp_path / "order.txt"
    path.write_text("# reversed\ns^2, s^1\ns^0  # unit\n0\n", encoding="utf-8")
    assert read_ordering_labels(path) == ["s^2", "s^1", "s^0", "0"]
    codes = element_ordering(gf4, Basis.polynomial(gf4), "file", path)
    np.testing.assert_array_equal(codes, [3, 2, 1, 0])


def test_incomplete_ordering_file(tmp_path: Path, gf4: FieldContext) -> None:
    path = tmp_path / "order.txt"
    path.write_text("0\ns^0\ns^0\ns^2\n", encoding="utf-8")
    with pytest.raises(ParseError):
        element_ordering(gf4, Basis.polynomial(gf4), "file", path)


def test_unknown_mode_and_missing_path(gf4: FieldContext) -> None:
    with pytest.raises(ValueError):
        element_ordering(gf4, Basis.polynomial(gf4), "spiral")
    with pytest.raises(ValueError):
        element_ordering(gf4, Basis.polynomial(gf4), "file")
