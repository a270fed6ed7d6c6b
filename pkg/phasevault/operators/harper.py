from __future__ import annotations

import numpy as np

from phasevault.operators.base import Operator, OperatorTag
from phasevault.operators.pauli import generator_U, generator_V
from phasevault.operators.space import single_qudit_space

__all__ = ["harper_hamiltonian"]


def harper_hamiltonian(d: int) -> Operator:
    """H = 2 - (U + U^dag)/2 - (V + V^dag)/2 on a single qudit; commutes with F."""
    space = single_qudit_space(d)
    shift = generator_U(space, space.ctx.one).matrix
    clock = generator_V(space, space.ctx.one).matrix
    matrix = 2.0 * np.eye(d) - 0.5 * (shift + shift.conj().T) - 0.5 * (clock + clock.conj().T)
    # Symmetrize so the hermitian tag holds bit-exactly.
    matrix = 0.5 * (matrix + matrix.conj().T)
    return Operator(matrix, space, frozenset({OperatorTag.HERMITIAN}), "H")
