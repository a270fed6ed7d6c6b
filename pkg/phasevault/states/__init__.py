from phasevault.states.coherent import coherent_state, default_fiducial, squeezed_state
from phasevault.states.diagnostics import (
    circular_dispersion,
    equivalent_under_qudit_permutation,
    reduced_purity,
    squeeze_coefficient_map,
    uncertainty_bound,
    uncertainty_product,
    uncertainty_ratio,
)
from phasevault.states.harper import harper_asymptotic, harper_energy, harper_ground_state, harper_overlap
from phasevault.states.reference import (
    XI,
    multi_reference_state,
    product_state,
    qubit_reference,
    reference_amplitudes,
    reference_state,
    reference_state_theta,
    single_reference,
)
from phasevault.states.vector import StateVector, ThetaParams

__all__ = [
    "XI",
    "StateVector",
    "ThetaParams",
    "circular_dispersion",
    "coherent_state",
    "default_fiducial",
    "equivalent_under_qudit_permutation",
    "harper_asymptotic",
    "harper_energy",
    "harper_ground_state",
    "harper_overlap",
    "multi_reference_state",
    "product_state",
    "qubit_reference",
    "reduced_purity",
    "reference_amplitudes",
    "reference_state",
    "reference_state_theta",
    "single_reference",
    "squeeze_coefficient_map",
    "squeezed_state",
    "uncertainty_bound",
    "uncertainty_product",
    "uncertainty_ratio",
]
