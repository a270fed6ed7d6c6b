from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from phasevault._types._alias import ComplexArray, RealArray
from phasevault.config.tolerance import DEFAULT_TOLERANCES, ToleranceConfig
from phasevault.core.exceptions import ContextMismatch, NormViolation
from phasevault.operators.base import Operator
from phasevault.operators.space import QuditSpace

__all__ = ["StateVector", "ThetaParams", "TAIL_BOUND"]

TAIL_BOUND = 1e-17


@dataclass(frozen=True, eq=False)
class StateVector:
    """Unit-norm amplitude vector in the index order of ``space``."""

    amps: ComplexArray
    space: QuditSpace
    label: str = ""
    tolerances: ToleranceConfig = field(default=DEFAULT_TOLERANCES, repr=False)

    def __post_init__(self) -> None:
        amps = np.array(self.amps, dtype=np.complex128).reshape(-1)
        if amps.shape != (self.space.dim,):
            raise ValueError(f"Expected {self.space.dim} amplitudes, got {amps.shape[0]}.")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > self.tolerances.norm:
            raise NormViolation(norm, self.tolerances.norm)
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    @classmethod
    def normalized(cls, amps: ComplexArray, space: QuditSpace, label: str = "") -> StateVector:
        vec = np.asarray(amps, dtype=np.complex128)
        return cls(vec / np.linalg.norm(vec), space, label)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def probabilities(self) -> RealArray:
        return np.abs(self.amps) ** 2

    def inner(self, other: StateVector) -> complex:
        """<self|other>."""
        if other.space != self.space:
            raise ContextMismatch("States live in differently labelled spaces.")
        return complex(np.vdot(self.amps, other.amps))

    def expectation(self, op: Operator) -> complex:
        return op.expectation(self.amps)

    def evolve(self, op: Operator, label: Optional[str] = None) -> StateVector:
        if op.space is not None and op.space != self.space:
            raise ContextMismatch("Operator and state live in differently labelled spaces.")
        label = label if label is not None else self.label
        return StateVector(op.apply(self.amps), self.space, label, self.tolerances)

    def density(self) -> Operator:
        return Operator.projector(self.amps, self.space)

    def distance(self, other: StateVector) -> float:
        return float(np.linalg.norm(self.amps - other.amps))


@dataclass(frozen=True)
class ThetaParams:
    """Truncation of the theta sum over k in [-K, K].

    ``C`` is the truncated theta_3(0 | e^(-2 pi / d)), the squared norm of the
    untruncated amplitudes up to a factor d^(1/2).
    """

    d: int
    K: int
    C: float = field(init=False)

    def __post_init__(self) -> None:
        if self.K < 1:
            raise ValueError(f"K must be positive, got {self.K}.")
        if self.tail >= TAIL_BOUND:
            raise ValueError(f"K={self.K} leaves a tail term {self.tail:.3e} >= {TAIL_BOUND:.0e} for d={self.d}.")
        k = np.arange(-self.K, self.K + 1)
        object.__setattr__(self, "C", float(np.sum(np.exp(-2.0 * math.pi * k**2 / self.d))))

    @property
    def tail(self) -> float:
        return math.exp(-math.pi * self.K**2 / self.d)

    @classmethod
    def for_dimension(cls, d: int) -> ThetaParams:
        return cls(d=d, K=math.ceil(math.sqrt(17.0 * math.log(10.0) * d / math.pi)) + 1)
