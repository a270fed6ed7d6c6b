"""Generalized Pauli generators, displacements and parity.

All phases come from the space's precomputed tables, so the same pair
(mu, nu) yields bit-identical matrices no matter which routine built them.
"""

from __future__ import annotations

import logging
from typing import Union

import numpy as np

from phasevault._types._alias import ComplexMatrix
from phasevault.core.exceptions import ContextMismatch
from phasevault.field.core import FieldContext, FieldElement
from phasevault.operators.base import Operator, OperatorTag
from phasevault.operators.space import PhasePoint, QuditSpace, as_space

__all__ = [
    "generator_U",
    "generator_V",
    "displacement",
    "displacement_matrix",
    "weyl_sum",
    "parity_from_displacements",
    "parity_operator",
]

logger = logging.getLogger(__name__)

SpaceLike = Union[QuditSpace, FieldContext]

_UNITARY = frozenset({OperatorTag.UNITARY})


def _check(space: QuditSpace, *elements: FieldElement) -> None:
    for element in elements:
        if element.ctx != space.ctx:
            raise ContextMismatch(f"Element {element} does not belong to {space.ctx!r}.")


def generator_U(target: SpaceLike, nu: FieldElement) -> Operator:
    """Shift U_nu |lambda> = |lambda + nu>."""
    space = as_space(target)
    _check(space, nu)
    rows = space.shift_table[:, space.index(nu)]
    matrix = np.zeros((space.dim, space.dim), dtype=np.complex128)
    matrix[rows, np.arange(space.dim)] = 1.0
    return Operator(matrix, space, _UNITARY, f"U({nu})")


def generator_V(target: SpaceLike, mu: FieldElement) -> Operator:
    """Modulation V_mu |lambda> = chi(mu lambda) |lambda>."""
    space = as_space(target)
    _check(space, mu)
    diagonal = space.character_table[space.index(mu)]
    return Operator(np.diag(diagonal), space, _UNITARY, f"V({mu})")


def displacement_matrix(space: QuditSpace, mu_index: int, nu_index: int) -> ComplexMatrix:
    """Raw matrix of D(mu, nu) = phi(mu, nu) U_nu V_mu from space indices."""
    matrix = np.zeros((space.dim, space.dim), dtype=np.complex128)
    columns = np.arange(space.dim)
    rows = space.shift_table[:, nu_index]
    matrix[rows, columns] = space.displacement_phases[mu_index, nu_index] * space.character_table[mu_index]
    return matrix


def displacement(target: SpaceLike, point: PhasePoint) -> Operator:
    space = as_space(target)
    _check(space, point.mu, point.nu)
    matrix = displacement_matrix(space, space.index(point.mu), space.index(point.nu))
    return Operator(matrix, space, _UNITARY, f"D{point}")


def weyl_sum(space: QuditSpace, coefficients: ComplexMatrix) -> ComplexMatrix:
    """sum_{kappa, lambda} c[kappa, lambda] D(kappa, lambda), both axes in space index order.

    Column a of D(kappa, lambda) has one entry, in row a + lambda, equal to
    phi(kappa, lambda) chi(kappa a). Summing over kappa first turns the
    double sum into one matrix product and a scatter.
    """
    coefficients = np.asarray(coefficients, dtype=np.complex128)
    if coefficients.shape != (space.dim, space.dim):
        raise ValueError(f"Expected a {space.dim}x{space.dim} coefficient array, got {coefficients.shape}.")
    weighted = coefficients * space.displacement_phases
    # by_shift[lambda, a] = sum_kappa weighted[kappa, lambda] chi(kappa a)
    by_shift = weighted.T @ space.character_table
    matrix = np.zeros((space.dim, space.dim), dtype=np.complex128)
    matrix[space.shift_table, np.arange(space.dim)[:, None]] = by_shift.T
    return matrix


def parity_from_displacements(target: SpaceLike) -> Operator:
    """d^-n sum over every displacement; equals lambda -> -lambda for odd d."""
    space = as_space(target)
    uniform = np.full((space.dim, space.dim), 1.0 / space.dim, dtype=np.complex128)
    return Operator(weyl_sum(space, uniform), space, label="P")


def parity_operator(target: SpaceLike) -> Operator:
    """The permutation P |lambda> = |-lambda>."""
    space = as_space(target)
    matrix = np.zeros((space.dim, space.dim), dtype=np.complex128)
    matrix[space.negation, np.arange(space.dim)] = 1.0
    return Operator(matrix, space, frozenset({OperatorTag.UNITARY, OperatorTag.HERMITIAN}), "P")
