from __future__ import annotations

import pytest

from phasevault.operators.fourier import single_qudit_fourier
from phasevault.states.harper import harper_asymptotic, harper_energy, harper_ground_state, harper_overlap


def test_ground_state_is_fourier_invariant() -> None:
    ground = harper_ground_state(7)
    fourier = single_qudit_fourier(7)
    assert abs(ground.inner(ground.evolve(fourier))) == pytest.approx(1.0, abs=1e-10)


@pytest.mark.slow
def test_energy_approaches_the_asymptotic_expansion() -> None:
    gaps = [abs(harper_energy(d) - harper_asymptotic(d)) for d in (11, 17, 23, 31)]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))


@pytest.mark.slow
def test_reference_state_is_close_to_the_ground_state() -> None:
    assert harper_overlap(31) > 0.999
