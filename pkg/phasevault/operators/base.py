from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import reduce
from typing import FrozenSet, Iterable, Optional, Sequence, Union

import numpy as np

from phasevault._types._alias import ComplexArray, ComplexMatrix
from phasevault.config.tolerance import DEFAULT_TOLERANCES, ToleranceConfig
from phasevault.core.exceptions import ContextMismatch, NotHermitian, NotUnitary
from phasevault.operators.space import QuditSpace

__all__ = ["OperatorTag", "Operator", "tensor", "unitarity_error", "hermiticity_error"]


class OperatorTag(str, Enum):
    UNITARY = "unitary"
    HERMITIAN = "hermitian"


def unitarity_error(matrix: ComplexMatrix) -> float:
    """max|A^dag A - I|."""
    return float(np.max(np.abs(matrix.conj().T @ matrix - np.eye(matrix.shape[0]))))


def hermiticity_error(matrix: ComplexMatrix) -> float:
    """max|A - A^dag|."""
    return float(np.max(np.abs(matrix - matrix.conj().T)))


@dataclass(frozen=True, eq=False)
class Operator:
    """Dense d^n x d^n complex matrix with optional unitary/hermitian tags.

    Tags are checked on construction against ``tolerances``; a tag that does
    not hold raises :class:`~phasevault.core.exceptions.NotUnitary` or
    :class:`~phasevault.core.exceptions.NotHermitian`. The matrix is stored
    read-only.
    """

    matrix: ComplexMatrix
    space: Optional[QuditSpace] = None
    tags: FrozenSet[OperatorTag] = frozenset()
    label: str = ""
    tolerances: ToleranceConfig = field(default=DEFAULT_TOLERANCES, repr=False)

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"Operators are square matrices, got shape {matrix.shape}.")
        if self.space is not None and matrix.shape[0] != self.space.dim:
            raise ValueError(f"Matrix of size {matrix.shape[0]} does not act on a space of dimension {self.space.dim}.")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "tags", frozenset(OperatorTag(t) for t in self.tags))

        if OperatorTag.UNITARY in self.tags:
            error = unitarity_error(matrix)
            if error >= self.tolerances.unitary:
                raise NotUnitary(error, self.tolerances.unitary)
        if OperatorTag.HERMITIAN in self.tags:
            error = hermiticity_error(matrix)
            if error >= self.tolerances.hermitian:
                raise NotHermitian(error, self.tolerances.hermitian)

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def is_unitary(self) -> bool:
        return OperatorTag.UNITARY in self.tags

    @property
    def is_hermitian(self) -> bool:
        return OperatorTag.HERMITIAN in self.tags

    def dagger(self) -> Operator:
        label = f"{self.label}^dag" if self.label else ""
        return Operator(self.matrix.conj().T, self.space, self.tags, label, self.tolerances)

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def expectation(self, amps: ComplexArray) -> complex:
        """<psi|A|psi> for a raw amplitude vector."""
        return complex(np.vdot(amps, self.matrix @ amps))

    def apply(self, amps: ComplexArray) -> ComplexArray:
        return self.matrix @ np.asarray(amps, dtype=np.complex128)

    def _join_space(self, other: Operator) -> Optional[QuditSpace]:
        if self.space is not None and other.space is not None and self.space != other.space:
            raise ContextMismatch("Operators act on differently labelled spaces.")
        return self.space if self.space is not None else other.space

    def __matmul__(self, other: Operator) -> Operator:
        space = self._join_space(other)
        # Products of unitaries stay unitary; hermiticity is not preserved.
        tags = frozenset({OperatorTag.UNITARY}) if self.is_unitary and other.is_unitary else frozenset()
        return Operator(self.matrix @ other.matrix, space, tags, tolerances=self.tolerances)

    def __add__(self, other: Operator) -> Operator:
        space = self._join_space(other)
        tags = frozenset({OperatorTag.HERMITIAN}) if self.is_hermitian and other.is_hermitian else frozenset()
        return Operator(self.matrix + other.matrix, space, tags, tolerances=self.tolerances)

    def __sub__(self, other: Operator) -> Operator:
        space = self._join_space(other)
        tags = frozenset({OperatorTag.HERMITIAN}) if self.is_hermitian and other.is_hermitian else frozenset()
        return Operator(self.matrix - other.matrix, space, tags, tolerances=self.tolerances)

    def __mul__(self, scalar: Union[int, float, complex]) -> Operator:
        return Operator(self.matrix * scalar, self.space, tolerances=self.tolerances)

    __rmul__ = __mul__

    def max_distance(self, other: Union[Operator, ComplexMatrix]) -> float:
        """max-norm distance to another operator or raw matrix."""
        target = other.matrix if isinstance(other, Operator) else np.asarray(other)
        return float(np.max(np.abs(self.matrix - target)))

    @classmethod
    def identity(cls, space: QuditSpace) -> Operator:
        tags = frozenset({OperatorTag.UNITARY, OperatorTag.HERMITIAN})
        return cls(np.eye(space.dim, dtype=np.complex128), space, tags, "I")

    @classmethod
    def projector(cls, amps: ComplexArray, space: Optional[QuditSpace] = None) -> Operator:
        """|psi><psi| for a raw amplitude vector."""
        vec = np.asarray(amps, dtype=np.complex128)
        return cls(np.outer(vec, vec.conj()), space, frozenset({OperatorTag.HERMITIAN}), "rho")


def tensor(factors: Union[Sequence[Operator], Iterable[Operator]]) -> Operator:
    """Kronecker product, leftmost factor most significant."""
    ops = list(factors)
    if not ops:
        raise ValueError("tensor() needs at least one factor.")
    matrix = reduce(np.kron, (op.matrix for op in ops))
    tags = frozenset({OperatorTag.UNITARY}) if all(op.is_unitary for op in ops) else frozenset()
    return Operator(matrix, None, tags)
