from __future__ import annotations

from typing import Optional

from phasevault.field.core import FieldElement
from phasevault.operators.pauli import displacement
from phasevault.operators.space import PhasePoint, QuditSpace
from phasevault.operators.squeeze import squeeze_operator
from phasevault.states.reference import multi_reference_state
from phasevault.states.vector import StateVector

__all__ = ["default_fiducial", "coherent_state", "squeezed_state"]


def default_fiducial(space: QuditSpace) -> StateVector:
    """Reference state of ``space``, built in its labelling basis when that is selfdual."""
    return multi_reference_state(space, space.basis if space.basis.is_selfdual else None)


def coherent_state(space: QuditSpace, point: PhasePoint, fiducial: Optional[StateVector] = None) -> StateVector:
    """|mu, nu> = D(mu, nu) |Psi0>."""
    base = fiducial if fiducial is not None else default_fiducial(space)
    return base.evolve(displacement(space, point), label=f"coherent{point}")


def squeezed_state(
    space: QuditSpace,
    squeeze: FieldElement,
    point: Optional[PhasePoint] = None,
    fiducial: Optional[StateVector] = None,
) -> StateVector:
    """D(p) S |Psi0>; without ``point`` this is the squeezed vacuum."""
    base = fiducial if fiducial is not None else default_fiducial(space)
    squeezed = base.evolve(squeeze_operator(space, squeeze), label=f"squeezed({squeeze})")
    if point is None:
        return squeezed
    return squeezed.evolve(displacement(space, point), label=f"squeezed({squeeze}){point}")
