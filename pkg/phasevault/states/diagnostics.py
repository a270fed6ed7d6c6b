"""Dispersions, uncertainty, squeeze relabelling and entanglement measures."""

from __future__ import annotations

import itertools
import math
from typing import Optional, Sequence, Tuple

import numpy as np

from phasevault._types._alias import Coordinates
from phasevault.core.exceptions import ContextMismatch, LengthMismatch, NotUnitary, ZeroSqueeze
from phasevault.field.basis import Basis
from phasevault.field.core import FieldElement
from phasevault.operators.base import Operator, unitarity_error
from phasevault.operators.pauli import generator_U, generator_V
from phasevault.states.vector import StateVector

__all__ = [
    "circular_dispersion",
    "uncertainty_product",
    "uncertainty_ratio",
    "uncertainty_bound",
    "squeeze_coefficient_map",
    "reduced_purity",
    "equivalent_under_qudit_permutation",
]


def circular_dispersion(state: StateVector, op: Operator) -> float:
    """1 - |<A>|^2 for a unitary A."""
    if not op.is_unitary:
        error = unitarity_error(op.matrix)
        if error >= state.tolerances.unitary:
            raise NotUnitary(error, state.tolerances.unitary)
    mean = state.expectation(op)
    return float(min(1.0, max(0.0, 1.0 - abs(mean) ** 2)))


def uncertainty_product(state: StateVector) -> float:
    """(Delta U)^2 (Delta V)^2 for the unit shift and unit modulation."""
    one = state.space.ctx.one
    shift = generator_U(state.space, one)
    clock = generator_V(state.space, one)
    return circular_dispersion(state, shift) * circular_dispersion(state, clock)


def uncertainty_bound(dim: int) -> float:
    return math.pi**2 / dim**2


def uncertainty_ratio(state: StateVector) -> float:
    """Uncertainty product divided by pi^2 / d^2."""
    return uncertainty_product(state) / uncertainty_bound(state.dim)


def squeeze_coefficient_map(squeeze: FieldElement, basis: Basis, ell: Sequence[int]) -> Coordinates:
    """Coordinates m of squeeze^-1 lambda, where lambda has coordinates ``ell``.

    S |l> = |m> with m_i = sum_{j,k} f_ijk l_j h_k, f_ijk = tr(theta'_i theta_j
    theta_k) and h the coordinates of squeeze^-1.
    """
    ctx = basis.ctx
    if squeeze.ctx != ctx:
        raise ContextMismatch("Squeeze parameter and basis come from different fields.")
    if squeeze.is_zero:
        raise ZeroSqueeze()
    if len(ell) != ctx.n:
        raise LengthMismatch(ctx.n, len(ell))
    theta = np.asarray(basis.codes, dtype=np.int64)
    dual = np.asarray(basis.dual.codes, dtype=np.int64)
    pair = ctx.mul_codes(theta[:, None], theta[None, :])
    structure = ctx.pair_trace(dual[:, None, None], pair[None, :, :])
    h = basis.expand_codes(squeeze.inverse().code)
    m = np.einsum("ijk,j,k->i", structure, np.asarray(ell, dtype=np.int64) % ctx.d, h) % ctx.d
    return tuple(int(v) for v in m)


def _as_tensor(state: StateVector) -> np.ndarray:
    return state.amps.reshape((state.space.d,) * state.space.n)


def reduced_purity(state: StateVector, qudit: int) -> float:
    """Tr(rho_j^2) of the reduced state of tensor factor ``qudit`` (0 is leftmost)."""
    n = state.space.n
    if not 0 <= qudit < n:
        raise IndexError(f"qudit must lie in [0, {n}), got {qudit}.")
    block = np.moveaxis(_as_tensor(state), qudit, 0).reshape(state.space.d, -1)
    reduced = block @ block.conj().T
    return float(np.real(np.trace(reduced @ reduced)))


def equivalent_under_qudit_permutation(
    first: StateVector, second: StateVector, atol: float = 1e-12
) -> Optional[Tuple[int, ...]]:
    """First qudit permutation carrying ``first`` onto ``second``, or None.

    The permutation is given as ``np.transpose`` axes of ``first``'s tensor.
    """
    if first.space.d != second.space.d or first.space.n != second.space.n:
        raise ContextMismatch("States have different numbers or kinds of qudits.")
    source, target = _as_tensor(first), _as_tensor(second)
    for perm in itertools.permutations(range(first.space.n)):
        if np.allclose(np.transpose(source, perm), target, rtol=0.0, atol=atol):
            return tuple(perm)
    return None
