from __future__ import annotations

import numpy as np
import pytest

from phasevault.core.exceptions import NotSelfdual
from phasevault.field.basis import Basis
from phasevault.field.core import FieldContext
from phasevault.operators.base import tensor
from phasevault.operators.factorization import basis_change_operator, factorize_displacement
from phasevault.operators.fourier import fourier, single_qudit_fourier
from phasevault.operators.pauli import displacement
from phasevault.operators.space import PhasePoint, QuditSpace


def test_cnot_from_basis_change(gf4: FieldContext) -> None:
    t = basis_change_operator(gf4, Basis.custom(gf4, ["s^1", "s^3"]), Basis.custom(gf4, ["s^1", "s^2"]))
    expected = np.zeros((4, 4))
    for row, col in ((0, 0), (3, 1), (2, 2), (1, 3)):
        expected[row, col] = 1.0
    np.testing.assert_array_equal(t.matrix, expected)
    assert t.is_unitary


@pytest.mark.parametrize("fixture", ["gf8_space", "gf27_space"])
def test_displacements_factorize_in_a_selfdual_basis(
    fixture: str, request: pytest.FixtureRequest, rng: np.random.Generator
) -> None:
    space: QuditSpace = request.getfixturevalue(fixture)
    for _ in range(20):
        i, j = rng.integers(space.dim, size=2)
        point = PhasePoint(space.element(int(i)), space.element(int(j)))
        factors = factorize_displacement(space, space.basis, point)
        assert len(factors) == space.n
        assert tensor(factors).max_distance(displacement(space, point)) < 1e-12
    assert tensor([single_qudit_fourier(space.d)] * space.n).max_distance(fourier(space)) < 1e-12


def test_factorization_needs_a_selfdual_basis(gf4: FieldContext) -> None:
    space = QuditSpace.default(gf4)
    with pytest.raises(NotSelfdual):
        factorize_displacement(space, Basis.polynomial(gf4), PhasePoint.origin(gf4))
