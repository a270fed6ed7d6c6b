"""Aliases shared across the field, operator and quasidistribution layers."""

from __future__ import annotations

from typing import Tuple

import numpy as np
from numpy.typing import NDArray
from typing_extensions import TypeAlias

from phasevault._types._sentinel import _Missing

NonNegativeInt: TypeAlias = int
PositiveInt: TypeAlias = int
Prime: TypeAlias = int
ElementCode: TypeAlias = int
Coordinates: TypeAlias = Tuple[int, ...]
Missing: TypeAlias = _Missing

IntArray: TypeAlias = NDArray[np.int64]
RealArray: TypeAlias = NDArray[np.float64]
ComplexArray: TypeAlias = NDArray[np.complex128]
ComplexMatrix: TypeAlias = NDArray[np.complex128]
