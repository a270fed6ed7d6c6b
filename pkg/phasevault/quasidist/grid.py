from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Union

import numpy as np

from phasevault._types._alias import ComplexMatrix, RealArray
from phasevault.config.tolerance import DEFAULT_TOLERANCES, ToleranceConfig
from phasevault.core.exceptions import ContextMismatch
from phasevault.operators.base import Operator
from phasevault.operators.space import PhasePoint, QuditSpace

__all__ = ["SOrder", "Normalization", "Kernel", "QuasiDistGrid"]


class SOrder(IntEnum):
    """Ordering parameter: +1 gives P, 0 the Wigner function, -1 the Q function."""

    P = 1
    WIGNER = 0
    Q = -1


class Normalization(str, Enum):
    RAW = "raw"
    UNIT_SUM = "unit-sum"


@dataclass(frozen=True)
class Kernel:
    point: PhasePoint
    s: SOrder
    op: Operator


@dataclass(frozen=True, eq=False)
class QuasiDistGrid:
    """W^(s)(mu, nu) with ``values[i, j]`` at mu = space.element(i), nu = space.element(j).

    Raw values sum to d^n Tr(rho). Values are stored real when the imaginary
    part is below the grid tolerance, complex otherwise.
    """

    values: Union[RealArray, ComplexMatrix]
    s: SOrder
    space: QuditSpace
    normalization: Normalization = Normalization.RAW
    tolerances: ToleranceConfig = field(default=DEFAULT_TOLERANCES, repr=False)

    def __post_init__(self) -> None:
        values = np.asarray(self.values)
        if values.shape != (self.space.dim, self.space.dim):
            raise ValueError(f"Grid must be {self.space.dim}x{self.space.dim}, got {values.shape}.")
        if np.iscomplexobj(values) and float(np.max(np.abs(values.imag))) < self.tolerances.grid:
            values = values.real
        values = np.array(values, dtype=np.complex128 if np.iscomplexobj(values) else np.float64)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "s", SOrder(self.s))
        object.__setattr__(self, "normalization", Normalization(self.normalization))

    @property
    def is_real(self) -> bool:
        return not np.iscomplexobj(self.values)

    @property
    def total(self) -> complex:
        return complex(np.sum(self.values))

    def unit_sum(self) -> QuasiDistGrid:
        """The same grid scaled so its values add up to one."""
        if self.normalization is Normalization.UNIT_SUM:
            return self
        total = np.sum(self.values)
        return QuasiDistGrid(self.values / total, self.s, self.space, Normalization.UNIT_SUM, self.tolerances)

    def value_at(self, point: PhasePoint) -> Union[float, complex]:
        if point.ctx != self.space.ctx:
            raise ContextMismatch("Phase point comes from a different field.")
        value = self.values[self.space.index(point.mu), self.space.index(point.nu)]
        return float(value) if self.is_real else complex(value)

    def max_distance(self, other: QuasiDistGrid) -> float:
        return float(np.max(np.abs(self.values - other.values)))
