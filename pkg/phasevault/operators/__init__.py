from phasevault.operators.base import Operator, OperatorTag, tensor
from phasevault.operators.factorization import basis_change_operator, factorize_displacement
from phasevault.operators.fourier import fourier, fourier_eigenvalues, single_qudit_fourier
from phasevault.operators.harper import harper_hamiltonian
from phasevault.operators.pauli import (
    displacement,
    generator_U,
    generator_V,
    parity_from_displacements,
    parity_operator,
    weyl_sum,
)
from phasevault.operators.space import PhasePoint, QuditSpace, as_space, single_qudit_space
from phasevault.operators.squeeze import squeeze_conjugation, squeeze_operator

__all__ = [
    "Operator",
    "OperatorTag",
    "PhasePoint",
    "QuditSpace",
    "as_space",
    "basis_change_operator",
    "displacement",
    "factorize_displacement",
    "fourier",
    "fourier_eigenvalues",
    "generator_U",
    "generator_V",
    "harper_hamiltonian",
    "parity_from_displacements",
    "parity_operator",
    "single_qudit_fourier",
    "single_qudit_space",
    "squeeze_conjugation",
    "squeeze_operator",
    "tensor",
]
