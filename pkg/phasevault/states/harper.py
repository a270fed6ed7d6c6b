"""Harper-Hamiltonian diagnostics of the reference state (single qudit)."""

from __future__ import annotations

import logging
import math

import numpy as np

from phasevault.operators.harper import harper_hamiltonian
from phasevault.states.reference import single_reference
from phasevault.states.vector import StateVector

__all__ = ["harper_ground_state", "harper_energy", "harper_asymptotic", "harper_overlap"]

logger = logging.getLogger(__name__)


def harper_ground_state(d: int) -> StateVector:
    """Lowest eigenvector of H, phase fixed so its largest entry is real positive."""
    hamiltonian = harper_hamiltonian(d)
    _, vectors = np.linalg.eigh(hamiltonian.matrix)
    ground = vectors[:, 0]
    pivot = ground[np.argmax(np.abs(ground))]
    ground = ground * (abs(pivot) / pivot)
    return StateVector.normalized(ground, hamiltonian.space, "harper")  # type: ignore[arg-type]


def harper_energy(d: int) -> float:
    """<psi0|H|psi0>."""
    return float(np.real(single_reference(d).expectation(harper_hamiltonian(d))))


def harper_asymptotic(d: int) -> float:
    """Large-d expansion pi/d - pi^2/(2 d^2) + pi^3/(6 d^3) of the reference energy."""
    return math.pi / d - math.pi**2 / (2 * d**2) + math.pi**3 / (6 * d**3)


def harper_overlap(d: int) -> float:
    """|<ground|psi0>|."""
    overlap = abs(harper_ground_state(d).inner(single_reference(d)))
    logger.debug("Harper overlap at d=%d: %.12f", d, overlap)
    return float(overlap)
