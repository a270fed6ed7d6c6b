"""s-ordered kernels and the forward/inverse quasidistribution maps.

With o(k, l) = <Psi0|D(k, l)|Psi0> the kernel family is

    w^(s)(mu, nu) = d^-n sum_{k,l} chi(mu l - nu k) D(k, l) o(k, l)^(-s),

which obeys w(mu, nu) = D(mu, nu) w(0, 0) D(mu, nu)^dag. Grids are never
built kernel by kernel: W = d^-n Xi X^T conj(Xi), where
X[k, l] = Tr[rho D(k, l)] o(k, l)^(-s) and Xi is the character table.
"""

from __future__ import annotations

import logging
from typing import Optional, Union

import numpy as np

from phasevault._types._alias import ComplexMatrix
from phasevault.config.tolerance import DEFAULT_TOLERANCES, ToleranceConfig
from phasevault.core.exceptions import ContextMismatch, NotHermitian, SingularPKernel
from phasevault.operators.base import Operator, OperatorTag, hermiticity_error
from phasevault.operators.pauli import weyl_sum
from phasevault.operators.space import PhasePoint, QuditSpace
from phasevault.quasidist.grid import Kernel, QuasiDistGrid, SOrder
from phasevault.states.coherent import default_fiducial
from phasevault.states.vector import StateVector

__all__ = [
    "Q_SCALE",
    "displacement_traces",
    "fiducial_overlaps",
    "hermitian_weyl_sum",
    "kernel_coefficients",
    "kernel",
    "quasidist",
    "reconstruct",
    "q_function",
    "coherent_family",
]

logger = logging.getLogger(__name__)

# quasidist(rho, -1) / q_function(rho); w^(-1)(0, 0) is exactly |Psi0><Psi0|.
Q_SCALE = 1.0


def displacement_traces(space: QuditSpace, rho: ComplexMatrix) -> ComplexMatrix:
    """T[k, l] = Tr[rho D(k, l)] for every phase point, in space index order."""
    rho = np.asarray(rho, dtype=np.complex128)
    # Tr[rho D(k, l)] = phi(k, l) sum_a chi(k a) rho[a, a + l]
    gathered = rho[np.arange(space.dim)[:, None], space.shift_table]
    return space.displacement_phases * (space.character_table @ gathered)


def fiducial_overlaps(space: QuditSpace, fiducial: Optional[StateVector] = None) -> ComplexMatrix:
    """o[k, l] = <Psi0|D(k, l)|Psi0>."""
    state = fiducial if fiducial is not None else default_fiducial(space)
    if state.space != space:
        raise ContextMismatch("Fiducial state lives in a differently labelled space.")
    return displacement_traces(space, np.outer(state.amps, state.amps.conj()))


def _weights(
    overlaps: ComplexMatrix, exponent: int, tolerances: ToleranceConfig = DEFAULT_TOLERANCES
) -> ComplexMatrix:
    """o^exponent, refusing negative powers of vanishing overlaps."""
    if exponent == 0:
        return np.ones_like(overlaps)
    if exponent < 0:
        smallest = float(np.min(np.abs(overlaps)))
        if smallest <= tolerances.singular:
            raise SingularPKernel(smallest, tolerances.singular)
    return overlaps.astype(np.complex128) ** exponent


def _resolve_space(space: Optional[QuditSpace], rho: Operator) -> QuditSpace:
    resolved = space if space is not None else rho.space
    if resolved is None:
        raise ValueError("The operator carries no space; pass one explicitly.")
    if rho.space is not None and rho.space != resolved:
        raise ContextMismatch("Operator and space disagree on the labelling.")
    return resolved


def hermitian_weyl_sum(
    space: QuditSpace,
    coefficients: ComplexMatrix,
    label: str = "",
    tolerances: ToleranceConfig = DEFAULT_TOLERANCES,
) -> Operator:
    """sum_{k,l} c[k, l] D(k, l), tagged hermitian only after checking it is.

    The check is relative to max(1, max|A|); rounding below that level is
    symmetrized away.
    """
    matrix = weyl_sum(space, coefficients)
    scale = max(1.0, float(np.max(np.abs(matrix))))
    error = hermiticity_error(matrix) / scale
    if error >= tolerances.hermitian:
        raise NotHermitian(error, tolerances.hermitian)
    matrix = 0.5 * (matrix + matrix.conj().T)
    return Operator(matrix, space, frozenset({OperatorTag.HERMITIAN}), label, tolerances)


def kernel_coefficients(
    space: QuditSpace,
    s: Union[SOrder, int],
    point: PhasePoint,
    fiducial: Optional[StateVector] = None,
    tolerances: ToleranceConfig = DEFAULT_TOLERANCES,
) -> ComplexMatrix:
    """c[k, l] = d^-n chi(mu l) chi(-nu k) o(k, l)^(-s), so that w^(s)(mu, nu) = sum c[k, l] D(k, l)."""
    order = SOrder(s)
    if point.ctx != space.ctx:
        raise ContextMismatch("Phase point comes from a different field.")
    weights = _weights(fiducial_overlaps(space, fiducial), -int(order), tolerances)
    mu, nu = space.index(point.mu), space.index(point.nu)
    phases = space.character_table[mu][None, :] * space.character_table[nu].conj()[:, None]
    return phases * weights / space.dim


def kernel(
    space: QuditSpace,
    s: Union[SOrder, int],
    point: PhasePoint,
    fiducial: Optional[StateVector] = None,
    tolerances: ToleranceConfig = DEFAULT_TOLERANCES,
) -> Kernel:
    order = SOrder(s)
    coefficients = kernel_coefficients(space, order, point, fiducial, tolerances)
    op = hermitian_weyl_sum(space, coefficients, f"w({int(order)}){point}", tolerances)
    return Kernel(point=point, s=order, op=op)


def quasidist(
    rho: Operator,
    s: Union[SOrder, int],
    fiducial: Optional[StateVector] = None,
    space: Optional[QuditSpace] = None,
    tolerances: ToleranceConfig = DEFAULT_TOLERANCES,
) -> QuasiDistGrid:
    """Grid of Tr[rho w^(s)(mu, nu)] over all d^(2n) phase points.

    ``tolerances.grid`` decides whether the grid is stored real and
    ``tolerances.singular`` guards the s=+1 weights.
    """
    order = SOrder(s)
    space = _resolve_space(space, rho)
    weighted = displacement_traces(space, rho.matrix)
    if order is not SOrder.WIGNER:
        weighted = weighted * _weights(fiducial_overlaps(space, fiducial), -int(order), tolerances)
    xi = space.character_table
    values = (xi @ weighted.T @ xi.conj()) / space.dim
    logger.debug("quasidist s=%d on GF(%d^%d): total %.6g", int(order), space.d, space.n, np.sum(values).real)
    return QuasiDistGrid(values, order, space, tolerances=tolerances)


def reconstruct(grid: QuasiDistGrid, fiducial: Optional[StateVector] = None) -> Operator:
    """rho = d^-n sum_{mu,nu} w^(-s)(mu, nu) W^(s)(mu, nu)."""
    space = grid.space
    xi = space.character_table
    # Y[k, l] = sum_{mu,nu} W[mu, nu] chi(mu l) chi(-nu k)
    folded = (xi @ np.asarray(grid.values, dtype=np.complex128) @ xi.conj()).T
    weights = _weights(fiducial_overlaps(space, fiducial), int(grid.s), grid.tolerances)
    matrix = weyl_sum(space, folded * weights / space.dim**2)
    return Operator(matrix, space, label="rho", tolerances=grid.tolerances)


def coherent_family(space: QuditSpace, fiducial: Optional[StateVector] = None) -> np.ndarray:
    """Array ``C[i, j, :]`` holding D(mu_i, nu_j)|Psi0>."""
    state = fiducial if fiducial is not None else default_fiducial(space)
    psi = state.amps
    family = np.zeros((space.dim, space.dim, space.dim), dtype=np.complex128)
    for j in range(space.dim):
        rows = space.shift_table[:, j]
        # (D psi)[a + nu] = phi(mu, nu) chi(mu a) psi[a]
        family[:, j, rows] = space.displacement_phases[:, j][:, None] * space.character_table * psi[None, :]
    return family


def q_function(
    rho: Operator,
    fiducial: Optional[StateVector] = None,
    space: Optional[QuditSpace] = None,
    tolerances: ToleranceConfig = DEFAULT_TOLERANCES,
) -> QuasiDistGrid:
    """Q(mu, nu) = <mu, nu|rho|mu, nu> by direct overlaps with the coherent family."""
    space = _resolve_space(space, rho)
    family = coherent_family(space, fiducial)
    values = np.einsum("ija,ab,ijb->ij", family.conj(), rho.matrix, family)
    return QuasiDistGrid(values / Q_SCALE, SOrder.Q, space, tolerances=tolerances)
