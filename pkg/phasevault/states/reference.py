"""The +1 Fourier eigenstate used as fiducial ("vacuum") state.

For an odd prime d the single-qudit state has amplitudes

    c_l  ~  sum_k omega(k l) exp(-pi k^2 / d)
         =  1 + 2 sum_{k>=1} exp(-pi k^2 / d) cos(2 pi k l / d),

a theta_3 value at z = pi l / d. Qubits use (|0> + xi |1>)/sqrt(1 + xi^2)
with xi = sqrt(2) - 1. Many qudits take the tensor product in a selfdual
basis.
"""

from __future__ import annotations

import logging
import math
import warnings
from functools import reduce
from typing import Optional, Sequence

import numpy as np

from phasevault._types._alias import ComplexArray, RealArray
from phasevault.core.exceptions import EvenDimension, NonCanonicalReference, NotSelfdual
from phasevault.field.basis import Basis, BasisKind, find_selfdual_basis
from phasevault.operators.space import QuditSpace, single_qudit_space
from phasevault.states.vector import TAIL_BOUND, StateVector, ThetaParams

__all__ = [
    "XI",
    "reference_amplitudes",
    "reference_state",
    "reference_state_theta",
    "qubit_reference",
    "single_reference",
    "multi_reference_state",
    "product_state",
]

logger = logging.getLogger(__name__)

XI = math.sqrt(2.0) - 1.0


def _check_odd(d: int) -> None:
    if d == 2:
        raise EvenDimension(d)
    if d < 3 or d % 2 == 0:
        raise ValueError(f"The reference state needs an odd prime, got d={d}.")


def reference_amplitudes(d: int, params: Optional[ThetaParams] = None) -> RealArray:
    """Normalized real amplitudes c_0 .. c_(d-1) of the theta-sum state."""
    _check_odd(d)
    params = params or ThetaParams.for_dimension(d)
    ell = np.arange(d)
    # cos(2 pi t / d) evaluated at min(t, d - t) so that c_l == c_(d-l) bit for bit.
    folded = np.minimum(ell, d - ell)
    cosines = np.cos(2.0 * math.pi * folded / d)
    amps = np.ones(d, dtype=np.float64)
    for k in range(1, params.K + 1):
        amps += 2.0 * math.exp(-math.pi * k * k / d) * cosines[(k * ell) % d]
    return amps / np.linalg.norm(amps)


def reference_state(d: int, params: Optional[ThetaParams] = None) -> StateVector:
    return StateVector(reference_amplitudes(d, params).astype(np.complex128), single_qudit_space(d), "psi0")


def reference_state_theta(d: int) -> StateVector:
    """Same state from the Jacobi triple product of theta_3(pi l / d | e^(-pi/d)).

    The factor prod (1 - q^2m) does not depend on l and drops out on
    normalization.
    """
    _check_odd(d)
    q = math.exp(-math.pi / d)
    terms = math.ceil((math.log(1.0 / TAIL_BOUND) * d / math.pi + 1.0) / 2.0) + 1
    odd_powers = q ** (2 * np.arange(1, terms + 1) - 1)
    z = math.pi * np.arange(d) / d
    factors = 1.0 + 2.0 * odd_powers[None, :] * np.cos(2.0 * z)[:, None] + odd_powers[None, :] ** 2
    amps = np.prod(factors, axis=1)
    return StateVector((amps / np.linalg.norm(amps)).astype(np.complex128), single_qudit_space(d), "psi0")


def qubit_reference() -> StateVector:
    amps = np.array([1.0, XI], dtype=np.complex128) / math.sqrt(1.0 + XI**2)
    return StateVector(amps, single_qudit_space(2), "psi0")


def single_reference(d: int) -> StateVector:
    return qubit_reference() if d == 2 else reference_state(d)


def _coordinates_in(space: QuditSpace, basis: Basis) -> np.ndarray:
    return basis.expand_codes(space.codes)


def multi_reference_state(space: QuditSpace, selfdual: Optional[Basis] = None) -> StateVector:
    """Tensor product of single-qudit reference states over the coordinates in ``selfdual``.

    Amplitudes are laid out in the index order of ``space``. An
    almost-selfdual basis is accepted with a :class:`NonCanonicalReference`
    warning.
    """
    basis = selfdual if selfdual is not None else find_selfdual_basis(space.ctx)
    if basis.ctx != space.ctx:
        raise NotSelfdual("The reference basis belongs to a different field.")
    if basis.kind is BasisKind.ALMOST_SELFDUAL or (not basis.is_selfdual and basis.is_almost_selfdual):
        warnings.warn(
            f"{basis.labels} is only almost selfdual; the reference state is non-canonical.",
            category=NonCanonicalReference,
            stacklevel=2,
        )
    elif not basis.is_selfdual:
        raise NotSelfdual(f"{basis.labels} is neither selfdual nor almost selfdual.")

    single = single_reference(space.d).amps
    coords = _coordinates_in(space, basis)
    amps = np.prod(single[coords], axis=-1)
    logger.debug("Reference state of GF(%d^%d) in basis %s", space.d, space.n, basis.labels)
    return StateVector(amps, space, "Psi0")


def product_state(space: QuditSpace, factors: Sequence[ComplexArray]) -> StateVector:
    """Kronecker product of per-qudit amplitude vectors in the tuple order of ``space``."""
    if len(factors) != space.n:
        raise ValueError(f"Expected {space.n} factors, got {len(factors)}.")
    vectors = [np.asarray(f, dtype=np.complex128) for f in factors]
    if any(v.shape != (space.d,) for v in vectors):
        raise ValueError(f"Each factor must have {space.d} amplitudes.")
    amps = reduce(np.kron, vectors)
    return StateVector.normalized(amps, space, "product")
