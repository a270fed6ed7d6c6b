from __future__ import annotations

from typing import Tuple, Union

import numpy as np

from phasevault.core.exceptions import ContextMismatch, ZeroSqueeze
from phasevault.field.core import FieldContext, FieldElement
from phasevault.operators.base import Operator, OperatorTag
from phasevault.operators.space import QuditSpace, as_space

__all__ = ["squeeze_operator", "squeeze_conjugation"]


def _validate(space: QuditSpace, squeeze: FieldElement) -> None:
    if squeeze.ctx != space.ctx:
        raise ContextMismatch(f"Squeeze parameter {squeeze} belongs to a different field.")
    if squeeze.is_zero:
        raise ZeroSqueeze()


def squeeze_operator(target: Union[QuditSpace, FieldContext], squeeze: FieldElement) -> Operator:
    """S = sum_lambda |lambda><squeeze lambda|, so S |lambda> = |squeeze^-1 lambda>."""
    space = as_space(target)
    _validate(space, squeeze)
    inverse = space.ctx.inv_codes(squeeze.code)
    rows = space.index_of[space.ctx.mul_codes(inverse, space.codes)]
    matrix = np.zeros((space.dim, space.dim), dtype=np.complex128)
    matrix[rows, np.arange(space.dim)] = 1.0
    return Operator(matrix, space, frozenset({OperatorTag.UNITARY}), f"S({squeeze})")


def squeeze_conjugation(
    target: Union[QuditSpace, FieldContext], squeeze: FieldElement
) -> Tuple[FieldElement, FieldElement]:
    """Label multipliers (a, b) with S U_nu S^dag = U_(a nu) and S V_mu S^dag = V_(b mu).

    For S |lambda> = |squeeze^-1 lambda> these are a = squeeze^-1 and b = squeeze.
    """
    space = as_space(target)
    _validate(space, squeeze)
    return squeeze.inverse(), squeeze
