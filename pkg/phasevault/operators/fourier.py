from __future__ import annotations

from collections import Counter
from typing import Dict, Union

import numpy as np

from phasevault.field.core import FieldContext
from phasevault.operators.base import Operator, OperatorTag
from phasevault.operators.space import QuditSpace, as_space, single_qudit_space

__all__ = ["fourier", "single_qudit_fourier", "fourier_eigenvalues", "FOURIER_SPECTRUM"]

FOURIER_SPECTRUM = (1 + 0j, -1 + 0j, 1j, -1j)


def fourier(target: Union[QuditSpace, FieldContext]) -> Operator:
    """F = d^(-n/2) sum chi(lambda lambda') |lambda><lambda'|."""
    space = as_space(target)
    matrix = space.character_table / np.sqrt(space.dim)
    return Operator(matrix, space, frozenset({OperatorTag.UNITARY}), "F")


def single_qudit_fourier(d: int) -> Operator:
    return fourier(single_qudit_space(d))


def fourier_eigenvalues(target: Union[QuditSpace, FieldContext]) -> Dict[complex, int]:
    """Multiplicity of each fourth root of unity in the spectrum of F.

    Every numerical eigenvalue is snapped to the nearest of 1, -1, i, -i;
    F^4 = I guarantees nothing else occurs.
    """
    eigenvalues = np.linalg.eigvals(fourier(target).matrix)
    roots = np.array(FOURIER_SPECTRUM)
    nearest = np.argmin(np.abs(eigenvalues[:, None] - roots[None, :]), axis=1)
    counts = Counter(int(k) for k in nearest)
    return {FOURIER_SPECTRUM[k]: counts.get(k, 0) for k in range(len(FOURIER_SPECTRUM))}
