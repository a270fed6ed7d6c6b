from __future__ import annotations

from typing import List, Sequence

import numpy as np
import pytest

from phasevault.core.exceptions import LengthMismatch, NotUnitary, ZeroSqueeze
from phasevault.operators.base import Operator
from phasevault.operators.space import QuditSpace
from phasevault.operators.squeeze import squeeze_operator
from phasevault.states.diagnostics import (
    circular_dispersion,
    equivalent_under_qudit_permutation,
    reduced_purity,
    squeeze_coefficient_map,
)
from phasevault.states.reference import product_state, reference_state


def pattern(space: QuditSpace, c: np.ndarray, rule: Sequence[Sequence[int]]) -> np.ndarray:
    """Amplitudes prod_r c_(sum of the picked bits of r)."""
    amps = np.ones(space.dim, dtype=np.complex128)
    for picks in rule:
        amps *= c[space.coordinates[:, list(picks)].sum(axis=1) % 2]
    return amps


def random_qubit(rng: np.random.Generator) -> np.ndarray:
    c = rng.normal(size=2) + 1j * rng.normal(size=2)
    return c / np.linalg.norm(c)


def test_circular_dispersion_rejects_non_unitaries(qutrit: QuditSpace) -> None:
    psi = reference_state(3)
    assert circular_dispersion(psi, Operator.identity(qutrit)) == pytest.approx(0.0)
    with pytest.raises(NotUnitary):
        circular_dispersion(psi, Operator(2 * np.eye(3), qutrit))


def test_squeeze_coefficient_map_matches_the_operator(gf27_space: QuditSpace) -> None:
    ctx = gf27_space.ctx
    for k in (1, 5, 13):
        squeeze = ctx.power(k)
        moved = np.argmax(np.abs(squeeze_operator(gf27_space, squeeze).matrix), axis=0)
        for i, ell in enumerate(gf27_space.coordinates):
            mapped = squeeze_coefficient_map(squeeze, gf27_space.basis, tuple(int(v) for v in ell))
            assert mapped == tuple(int(v) for v in gf27_space.coordinates[moved[i]])


def test_squeeze_coefficient_map_errors(gf8_space: QuditSpace) -> None:
    ctx = gf8_space.ctx
    with pytest.raises(ZeroSqueeze):
        squeeze_coefficient_map(ctx.zero, gf8_space.basis, (1, 0, 0))
    with pytest.raises(LengthMismatch):
        squeeze_coefficient_map(ctx.one, gf8_space.basis, (1, 0))


def test_three_qubit_squeeze_patterns(gf8_space: QuditSpace, rng: np.random.Generator) -> None:
    c = random_qubit(rng)
    psi = product_state(gf8_space, [c, c, c])
    squeeze = squeeze_operator(gf8_space, gf8_space.ctx.sigma)
    backward = psi.evolve(squeeze.dagger())
    forward = psi.evolve(squeeze)
    np.testing.assert_allclose(backward.amps, pattern(gf8_space, c, [(0, 1), (0, 2), (1,)]), atol=1e-12)
    np.testing.assert_allclose(forward.amps, pattern(gf8_space, c, [(0, 1, 2), (0, 2), (2,)]), atol=1e-12)


@pytest.mark.parametrize("leader, followers", [(1, [2, 4]), (3, [5, 6])])
def test_frobenius_orbits_differ_by_qubit_permutation(
    gf8_space: QuditSpace, rng: np.random.Generator, leader: int, followers: List[int]
) -> None:
    c = random_qubit(rng)
    psi = product_state(gf8_space, [c, c, c])
    ctx = gf8_space.ctx
    lead = psi.evolve(squeeze_operator(gf8_space, ctx.power(leader)))
    for k in followers:
        other = psi.evolve(squeeze_operator(gf8_space, ctx.power(k)))
        assert equivalent_under_qudit_permutation(other, lead) is not None


def test_squeezing_entangles_generic_products(gf8_space: QuditSpace, rng: np.random.Generator) -> None:
    psi = product_state(gf8_space, [random_qubit(rng) for _ in range(3)])
    assert [reduced_purity(psi, j) for j in range(3)] == pytest.approx([1.0, 1.0, 1.0])
    squeezed = psi.evolve(squeeze_operator(gf8_space, gf8_space.ctx.sigma))
    assert reduced_purity(squeezed, 0) < 1.0 - 1e-6
    with pytest.raises(IndexError):
        reduced_purity(psi, 3)
