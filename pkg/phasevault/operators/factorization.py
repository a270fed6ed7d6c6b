"""Basis changes between tuple labellings, and tensor factorization.

Only a selfdual basis makes the field labels split into independent
per-qudit labels: there tr(mu nu) = sum_j m_j n_j, so every character, and
with it every displacement, factorizes over the qudits.
"""

from __future__ import annotations

from typing import List

import numpy as np

from phasevault.core.exceptions import BasisMismatch, ContextMismatch, NotSelfdual
from phasevault.field.basis import Basis
from phasevault.field.core import FieldContext
from phasevault.operators.base import Operator, OperatorTag
from phasevault.operators.pauli import displacement
from phasevault.operators.space import PhasePoint, QuditSpace, single_qudit_space

__all__ = ["basis_change_operator", "factorize_displacement"]


def _flat_index(coords: np.ndarray, d: int) -> np.ndarray:
    n = coords.shape[-1]
    weights = d ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return coords @ weights


def basis_change_operator(ctx: FieldContext, source: Basis, target: Basis) -> Operator:
    """T = sum_mu |m_1 ... m_n><m'_1 ... m'_n|, m' in ``source`` and m in ``target``."""
    if source.ctx != ctx or target.ctx != ctx:
        raise BasisMismatch("Both bases must belong to the given field.")
    codes = np.arange(ctx.order, dtype=np.int64)
    columns = _flat_index(source.expand_codes(codes), ctx.d)
    rows = _flat_index(target.expand_codes(codes), ctx.d)
    matrix = np.zeros((ctx.order, ctx.order), dtype=np.complex128)
    matrix[rows, columns] = 1.0
    return Operator(matrix, None, frozenset({OperatorTag.UNITARY}), "T")


def factorize_displacement(space: QuditSpace, selfdual: Basis, point: PhasePoint) -> List[Operator]:
    """Single-qudit factors D(m_j, n_j) whose tensor product is D(mu, nu).

    The product reproduces the field displacement on a space labelled by
    ``selfdual`` itself.
    """
    if not selfdual.is_selfdual:
        raise NotSelfdual(f"{selfdual.labels} is not selfdual; displacements do not factorize in it.")
    if selfdual.ctx != space.ctx or point.ctx != space.ctx:
        raise ContextMismatch("Basis, point and space must share one field.")
    m = selfdual.expand_codes(point.mu.code)
    n = selfdual.expand_codes(point.nu.code)
    qudit = single_qudit_space(space.d)
    return [displacement(qudit, PhasePoint.from_ints(qudit.ctx, int(a), int(b))) for a, b in zip(m, n)]
