from __future__ import annotations

import numpy as np
import pytest

from phasevault.core.exceptions import ContextMismatch
from phasevault.field.core import FieldContext
from phasevault.operators.pauli import (
    displacement,
    generator_U,
    generator_V,
    parity_from_displacements,
    parity_operator,
    weyl_sum,
)
from phasevault.operators.space import PhasePoint, QuditSpace, single_qudit_space


@pytest.mark.parametrize("fixture", ["qutrit", "d5", "gf8_space", "gf27_space"])
def test_weyl_commutation(fixture: str, request: pytest.FixtureRequest) -> None:
    space: QuditSpace = request.getfixturevalue(fixture)
    ctx = space.ctx
    for mu in (ctx.one, ctx.sigma, ctx.power(2)):
        for nu in (ctx.one, ctx.sigma, ctx.power(3)):
            lhs = generator_V(space, mu).matrix @ generator_U(space, nu).matrix
            rhs = (mu * nu).character() * generator_U(space, nu).matrix @ generator_V(space, mu).matrix
            np.testing.assert_allclose(lhs, rhs, atol=1e-12)


def test_shift_and_clock_act_on_kets(d5: QuditSpace) -> None:
    ctx = d5.ctx
    ket = np.zeros(5)
    ket[d5.index(ctx.scalar(2))] = 1.0
    shifted = generator_U(d5, ctx.scalar(4)).apply(ket)
    assert shifted[d5.index(ctx.scalar(1))] == 1.0
    clocked = generator_V(d5, ctx.scalar(3)).apply(ket)
    assert clocked[d5.index(ctx.scalar(2))] == pytest.approx(np.exp(2j * np.pi * 6 / 5))


def test_composition_law(d7: QuditSpace) -> None:
    ctx = d7.ctx
    p, q = PhasePoint.from_ints(ctx, 2, 5), PhasePoint.from_ints(ctx, 6, 3)
    # 2^-1 = 4 mod 7
    phase = complex(np.exp(2j * np.pi * (4 * (2 * 3 - 6 * 5) % 7) / 7))
    lhs = displacement(d7, p) @ displacement(d7, q)
    assert lhs.max_distance(phase * displacement(d7, p + q)) < 1e-12


@pytest.mark.parametrize("fixture", ["d5", "gf8_space", "gf27_space"])
def test_dagger_is_negated_point(fixture: str, request: pytest.FixtureRequest) -> None:
    space: QuditSpace = request.getfixturevalue(fixture)
    ctx = space.ctx
    p = PhasePoint(ctx.power(1), ctx.power(2))
    assert displacement(space, p).dagger().max_distance(displacement(space, -p)) < 1e-12
    assert displacement(space, PhasePoint.origin(ctx)).max_distance(np.eye(space.dim)) == 0.0


def test_qubit_displacement_carries_i_phase() -> None:
    qubit = single_qudit_space(2)
    y = displacement(qubit, PhasePoint.from_ints(qubit.ctx, 1, 1))
    np.testing.assert_allclose(y.matrix, [[0, -1j], [1j, 0]], atol=1e-15)
    assert y.max_distance(y.dagger()) < 1e-15


def test_weyl_sum_matches_explicit_sum(qutrit: QuditSpace, rng: np.random.Generator) -> None:
    coefficients = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    expected = sum(
        coefficients[i, j] * displacement(qutrit, PhasePoint(qutrit.element(i), qutrit.element(j))).matrix
        for i in range(3)
        for j in range(3)
    )
    np.testing.assert_allclose(weyl_sum(qutrit, coefficients), expected, atol=1e-12)
    with pytest.raises(ValueError):
        weyl_sum(qutrit, np.ones((2, 2)))


@pytest.mark.parametrize("fixture", ["qutrit", "d7", "gf27_space"])
def test_parity_is_average_displacement_for_odd_d(fixture: str, request: pytest.FixtureRequest) -> None:
    space: QuditSpace = request.getfixturevalue(fixture)
    parity = parity_operator(space)
    assert parity_from_displacements(space).max_distance(parity) < 1e-11
    np.testing.assert_array_equal(parity.matrix @ parity.matrix, np.eye(space.dim))


def test_elements_from_another_field_are_rejected(d5: QuditSpace, gf4: FieldContext) -> None:
    with pytest.raises(ContextMismatch):
        generator_U(d5, gf4.one)
