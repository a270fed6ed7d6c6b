"""Hilbert-space labelling of n qudits by field elements.

:class:`QuditSpace` fixes which basis turns an element lambda into the ket
|l_1 ... l_n>, and stores the index tables every dense operator is built
from. Index of lambda = sum_j l_j d^(n-1-j): the first coordinate is the
leftmost tensor factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import List, Union

import numpy as np

from phasevault._types._alias import ComplexMatrix, IntArray
from phasevault.core.exceptions import ContextMismatch
from phasevault.field.basis import Basis, BasisKind, find_selfdual_basis
from phasevault.field.core import FieldContext, FieldElement, make_field

__all__ = ["QuditSpace", "PhasePoint", "as_space", "single_qudit_space"]


@dataclass(frozen=True, eq=False)
class QuditSpace:
    ctx: FieldContext
    basis: Basis

    codes: IntArray = field(init=False, repr=False)
    index_of: IntArray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.basis.ctx != self.ctx:
            raise ContextMismatch("The labelling basis belongs to a different field.")
        tuples = np.array(np.unravel_index(np.arange(self.ctx.order), (self.ctx.d,) * self.ctx.n)).T
        codes = self.basis.compose_codes(tuples).astype(np.int64)
        index_of = np.empty(self.ctx.order, dtype=np.int64)
        index_of[codes] = np.arange(self.ctx.order, dtype=np.int64)
        for name, table in (("codes", codes), ("index_of", index_of)):
            table.setflags(write=False)
            object.__setattr__(self, name, table)

    @classmethod
    def default(cls, ctx: FieldContext) -> QuditSpace:
        """Selfdual labelling when the field has one, else the polynomial basis."""
        return _default_space(ctx)

    @classmethod
    def single(cls, d: int) -> QuditSpace:
        return single_qudit_space(d)

    @property
    def d(self) -> int:
        return self.ctx.d

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def dim(self) -> int:
        return self.ctx.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuditSpace):
            return NotImplemented
        return self is other or (self.ctx == other.ctx and self.basis.codes == other.basis.codes)

    def __hash__(self) -> int:
        return hash((self.ctx, self.basis.codes))

    def index(self, element: FieldElement) -> int:
        if element.ctx != self.ctx:
            raise ContextMismatch("Element belongs to a different field.")
        return int(self.index_of[element.code])

    def element(self, index: int) -> FieldElement:
        return self.ctx.element(int(self.codes[index]))

    def labels(self) -> List[str]:
        return [self.ctx.element(int(c)).label for c in self.codes]

    @cached_property
    def coordinates(self) -> IntArray:
        """Row i holds (l_1, ..., l_n) of the i-th ket."""
        return np.array(np.unravel_index(np.arange(self.dim), (self.d,) * self.n)).T

    @cached_property
    def shift_table(self) -> IntArray:
        """``shift_table[i, j]`` is the index of lambda_i + lambda_j."""
        return self.index_of[self.ctx.add_codes(self.codes[:, None], self.codes[None, :])]

    @cached_property
    def negation(self) -> IntArray:
        return self.index_of[self.ctx.neg_codes(self.codes)]

    @cached_property
    def character_table(self) -> ComplexMatrix:
        """``character_table[i, j] = chi(lambda_i lambda_j)``; symmetric."""
        table = self.ctx.roots_of_unity[self.ctx.pair_trace(self.codes[:, None], self.codes[None, :])]
        table.setflags(write=False)
        return table

    @cached_property
    def phase_frame(self) -> Basis:
        """Selfdual basis in which qubit displacement phases are read off."""
        return find_selfdual_basis(self.ctx)

    @cached_property
    def displacement_phases(self) -> ComplexMatrix:
        """phi(mu_i, nu_j), with D(mu, nu) = phi(mu, nu) U_nu V_mu.

        Odd d uses chi(2^-1 mu nu). For d = 2 the phase is i^(sum_j m_j n_j)
        with (m_j), (n_j) the selfdual coordinates of mu and nu.
        """
        if self.d == 2:
            coords = self.phase_frame.expand_codes(self.codes)
            exponents = (coords @ coords.T) % 4
            phases = (1j ** np.arange(4))[exponents]
        else:
            half = (self.d + 1) // 2
            halved = self.ctx.scale_codes(half, self.codes)
            phases = self.ctx.roots_of_unity[self.ctx.pair_trace(halved[:, None], self.codes[None, :])]
        phases = np.asarray(phases, dtype=np.complex128)
        phases.setflags(write=False)
        return phases


@lru_cache(maxsize=None)
def _default_space(ctx: FieldContext) -> QuditSpace:
    candidate = find_selfdual_basis(ctx)
    basis = candidate if candidate.kind is BasisKind.SELFDUAL else Basis.polynomial(ctx)
    return QuditSpace(ctx, basis)


@lru_cache(maxsize=None)
def single_qudit_space(d: int) -> QuditSpace:
    ctx = make_field(d, 1)
    return QuditSpace(ctx, Basis.polynomial(ctx))


def as_space(target: Union[QuditSpace, FieldContext]) -> QuditSpace:
    return target if isinstance(target, QuditSpace) else QuditSpace.default(target)


@dataclass(frozen=True)
class PhasePoint:
    """(mu, nu): mu labels V (modulation), nu labels U (shift)."""

    mu: FieldElement
    nu: FieldElement

    def __post_init__(self) -> None:
        if self.mu.ctx != self.nu.ctx:
            raise ContextMismatch("Both labels of a phase point must come from the same field.")

    @property
    def ctx(self) -> FieldContext:
        return self.mu.ctx

    @classmethod
    def origin(cls, ctx: FieldContext) -> PhasePoint:
        return cls(ctx.zero, ctx.zero)

    @classmethod
    def from_ints(cls, ctx: FieldContext, m: int, n: int) -> PhasePoint:
        """Prime-field shortcut: (m, n) in Z_d."""
        return cls(ctx.scalar(m), ctx.scalar(n))

    def __add__(self, other: PhasePoint) -> PhasePoint:
        return PhasePoint(self.mu + other.mu, self.nu + other.nu)

    def __neg__(self) -> PhasePoint:
        return PhasePoint(-self.mu, -self.nu)

    def __sub__(self, other: PhasePoint) -> PhasePoint:
        return self + (-other)

    def __str__(self) -> str:
        return f"({self.mu}, {self.nu})"
