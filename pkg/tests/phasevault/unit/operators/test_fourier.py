from __future__ import annotations

import numpy as np
import pytest

from phasevault.operators.fourier import fourier, fourier_eigenvalues
from phasevault.operators.harper import harper_hamiltonian
from phasevault.operators.pauli import displacement, parity_operator
from phasevault.operators.space import PhasePoint, QuditSpace


@pytest.mark.parametrize("fixture", ["qutrit", "d5", "gf8_space", "gf27_space"])
def test_fourier_square_is_parity(fixture: str, request: pytest.FixtureRequest) -> None:
    space: QuditSpace = request.getfixturevalue(fixture)
    f = fourier(space)
    assert f.is_unitary
    assert (f @ f).max_distance(parity_operator(space)) < 1e-12
    np.testing.assert_allclose(np.linalg.matrix_power(f.matrix, 4), np.eye(space.dim), atol=1e-12)


def test_fourier_spectrum_d5(d5: QuditSpace) -> None:
    assert fourier_eigenvalues(d5) == {1 + 0j: 2, -1 + 0j: 1, 1j: 1, -1j: 1}


@pytest.mark.parametrize("fixture", ["d7", "gf27_space"])
def test_fourier_rotates_displacements(
    fixture: str, request: pytest.FixtureRequest, rng: np.random.Generator
) -> None:
    space: QuditSpace = request.getfixturevalue(fixture)
    f = fourier(space)
    for _ in range(10):
        i, j = rng.integers(space.dim, size=2)
        mu, nu = space.element(int(i)), space.element(int(j))
        rotated = f @ displacement(space, PhasePoint(mu, nu)) @ f.dagger()
        assert rotated.max_distance(displacement(space, PhasePoint(nu, -mu))) < 1e-10


def test_harper_commutes_with_fourier(d7: QuditSpace) -> None:
    h = harper_hamiltonian(7)
    f = fourier(d7)
    assert h.is_hermitian
    assert (h @ f).max_distance(f @ h) < 1e-12
