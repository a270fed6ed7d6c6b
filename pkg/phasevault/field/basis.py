"""Bases of GF(d^n) over Z_d and the trace form that pairs them.

A basis {theta_j} identifies an element lambda with the tuple (l_1, ..., l_n),
``lambda = sum_j l_j theta_j``. Coordinates are read off with the dual basis,
``l_j = tr(lambda theta'_j)``, where ``tr(theta_k theta'_l) = delta_kl``.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import List, Sequence, Tuple, Union

import numpy as np
from sympy import Matrix

from phasevault._types._alias import Coordinates, IntArray
from phasevault.core.exceptions import BasisMismatch, LengthMismatch, ParseError, SingularGram
from phasevault.field.core import FieldContext, FieldElement

__all__ = [
    "BasisKind",
    "Basis",
    "gram_matrix",
    "dual_basis",
    "expand",
    "compose",
    "find_selfdual_basis",
    "parse_element",
]

logger = logging.getLogger(__name__)

_POWER = re.compile(r"^(?:s|σ)(?:\^(-?\d+))?$")


class BasisKind(str, Enum):
    POLYNOMIAL = "polynomial"
    NORMAL = "normal"
    SELFDUAL = "selfdual"
    ALMOST_SELFDUAL = "almost-selfdual"
    CUSTOM = "custom"


def _trace_gram(ctx: FieldContext, codes: Sequence[int]) -> IntArray:
    arr = np.asarray(codes, dtype=np.int64)
    return ctx.pair_trace(arr[:, None], arr[None, :]).astype(np.int64)


def _is_almost_selfdual(gram: IntArray) -> bool:
    off_diagonal = gram - np.diag(np.diag(gram))
    diagonal = np.diag(gram)
    return not off_diagonal.any() and bool(np.all(diagonal != 0)) and int(np.sum(diagonal != 1)) <= 1


@dataclass(frozen=True)
class Basis:
    elements: Tuple[FieldElement, ...]
    kind: BasisKind = BasisKind.CUSTOM

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "kind", BasisKind(self.kind))
        if not self.elements:
            raise ValueError("A basis needs at least one element.")
        ctx = self.elements[0].ctx
        if any(e.ctx != ctx for e in self.elements):
            raise BasisMismatch("Basis elements come from different fields.")
        if len(self.elements) != ctx.n:
            raise LengthMismatch(ctx.n, len(self.elements))
        if int(Matrix(self.coefficient_matrix.tolist()).det()) % ctx.d == 0:
            raise ValueError(f"Elements {self.labels} are linearly dependent over Z_{ctx.d}.")
        if self.kind is BasisKind.SELFDUAL and not self.is_selfdual:
            raise ValueError(f"{self.labels} is declared selfdual but its Gram matrix is {self.gram.tolist()}.")
        if self.kind is BasisKind.ALMOST_SELFDUAL and not _is_almost_selfdual(self.gram):
            raise ValueError(f"{self.labels} is declared almost-selfdual but its Gram matrix is {self.gram.tolist()}.")

    @property
    def ctx(self) -> FieldContext:
        return self.elements[0].ctx

    @property
    def codes(self) -> Tuple[int, ...]:
        return tuple(e.code for e in self.elements)

    @property
    def labels(self) -> List[str]:
        return [e.label for e in self.elements]

    @cached_property
    def coefficient_matrix(self) -> IntArray:
        """Row j holds the polynomial coefficients of theta_j."""
        return np.array([e.coeffs for e in self.elements], dtype=np.int64)

    @cached_property
    def gram(self) -> IntArray:
        return _trace_gram(self.ctx, self.codes)

    @property
    def is_selfdual(self) -> bool:
        return bool(np.array_equal(self.gram, np.eye(len(self.elements), dtype=np.int64)))

    @property
    def is_almost_selfdual(self) -> bool:
        return _is_almost_selfdual(self.gram)

    @cached_property
    def dual(self) -> Basis:
        if self.is_selfdual:
            return self
        try:
            inverse = Matrix(self.gram.tolist()).inv_mod(self.ctx.d)
        except ValueError as err:
            raise SingularGram(f"Gram matrix {self.gram.tolist()} of {self.labels} is singular mod {self.ctx.d}.") from err
        weights = np.array(inverse.tolist(), dtype=np.int64) % self.ctx.d
        coeffs = (weights @ self.coefficient_matrix) % self.ctx.d
        return Basis(tuple(self.ctx.from_coeffs(row) for row in coeffs), kind=BasisKind.CUSTOM)

    def expand_codes(self, codes: Union[int, IntArray]) -> IntArray:
        """Coordinates of every code in ``codes``; output shape ``(*codes.shape, n)``."""
        arr = np.asarray(codes, dtype=np.int64)
        dual_codes = np.asarray(self.dual.codes, dtype=np.int64)
        return self.ctx.pair_trace(arr[..., None], dual_codes)

    def compose_codes(self, coords: IntArray) -> IntArray:
        """Inverse of :meth:`expand_codes` along the last axis."""
        arr = np.asarray(coords, dtype=np.int64)
        if arr.shape[-1] != len(self.elements):
            raise LengthMismatch(len(self.elements), arr.shape[-1])
        coeffs = (arr @ self.coefficient_matrix) % self.ctx.d
        return coeffs @ self.ctx.powers

    @classmethod
    def polynomial(cls, ctx: FieldContext) -> Basis:
        """{1, x, ..., x^{n-1}} in terms of the field polynomial's root."""
        unit_rows = np.eye(ctx.n, dtype=np.int64)
        return cls(tuple(ctx.from_coeffs(row) for row in unit_rows), kind=BasisKind.POLYNOMIAL)

    @classmethod
    def normal(cls, ctx: FieldContext) -> Basis:
        """{beta, beta^d, ..., beta^(d^(n-1))} for the first beta, by discrete log, that spans."""
        for exponent in range(ctx.order - 1):
            beta = ctx.power(exponent)
            conjugates = tuple(beta ** (ctx.d**k) for k in range(ctx.n))
            matrix = Matrix([list(c.coeffs) for c in conjugates])
            if int(matrix.det()) % ctx.d != 0:
                return cls(conjugates, kind=BasisKind.NORMAL)
        raise RuntimeError(f"GF({ctx.d}^{ctx.n}) has no normal basis; this contradicts field theory.")

    @classmethod
    def custom(cls, ctx: FieldContext, elements: Sequence[Union[FieldElement, str]]) -> Basis:
        """A user basis; kind is detected from the Gram matrix."""
        parsed = tuple(e if isinstance(e, FieldElement) else parse_element(e, ctx) for e in elements)
        if any(e.ctx != ctx for e in parsed):
            raise BasisMismatch("Basis elements come from a different field.")
        gram = _trace_gram(ctx, [e.code for e in parsed])
        if np.array_equal(gram, np.eye(len(parsed), dtype=np.int64)):
            kind = BasisKind.SELFDUAL
        elif len(parsed) == ctx.n and _is_almost_selfdual(gram):
            kind = BasisKind.ALMOST_SELFDUAL
        else:
            kind = BasisKind.CUSTOM
        return cls(parsed, kind=kind)


def gram_matrix(b: Basis) -> IntArray:
    return b.gram.copy()


def dual_basis(b: Basis) -> Basis:
    return b.dual


def expand(element: FieldElement, b: Basis) -> Coordinates:
    if element.ctx != b.ctx:
        raise BasisMismatch("Element and basis come from different fields.")
    return tuple(int(c) for c in b.expand_codes(element.code))


def compose(coords: Sequence[int], b: Basis) -> FieldElement:
    if len(coords) != len(b.elements):
        raise LengthMismatch(len(b.elements), len(coords))
    return b.ctx.element(int(b.compose_codes(np.asarray(coords, dtype=np.int64) % b.ctx.d)))


def _orthogonal_search(ctx: FieldContext, relax_last: bool) -> Union[Tuple[int, ...], None]:
    candidates = np.asarray(ctx.antilog, dtype=np.int64)
    squares = ctx.pair_trace(candidates, candidates)
    unit = squares == 1
    nonzero = squares != 0
    n = ctx.n

    def search(prefix: Tuple[int, ...], allowed: np.ndarray, start: int) -> Union[Tuple[int, ...], None]:
        slot = len(prefix)
        if slot == n:
            return prefix
        admissible = nonzero if (relax_last and slot == n - 1) else unit
        positions = np.flatnonzero(allowed & admissible)
        for position in positions[positions >= start]:
            orthogonal = ctx.pair_trace(candidates[position], candidates) == 0
            found = search((*prefix, int(position)), allowed & orthogonal, int(position) + 1)
            if found is not None:
                return found
        return None

    found = search((), np.ones_like(unit), 0)
    return None if found is None else tuple(int(candidates[p]) for p in found)


def find_selfdual_basis(ctx: FieldContext) -> Basis:
    """Lexicographically first selfdual basis, elements ordered by discrete log.

    Fields without one (d odd, n even) get the first almost-selfdual basis
    instead, where only the last element may have tr(theta^2) != 1.
    """
    codes = _orthogonal_search(ctx, relax_last=False)
    if codes is not None:
        basis = Basis(tuple(ctx.element(c) for c in codes), kind=BasisKind.SELFDUAL)
        logger.debug("Selfdual basis of GF(%d^%d): %s", ctx.d, ctx.n, basis.labels)
        return basis
    codes = _orthogonal_search(ctx, relax_last=True)
    if codes is None:
        raise RuntimeError(f"GF({ctx.d}^{ctx.n}) has neither a selfdual nor an almost-selfdual basis.")
    basis = Basis(tuple(ctx.element(c) for c in codes), kind=BasisKind.ALMOST_SELFDUAL)
    logger.debug("No selfdual basis of GF(%d^%d); almost-selfdual %s", ctx.d, ctx.n, basis.labels)
    return basis


def parse_element(text: str, ctx: FieldContext, basis: Union[Basis, None] = None) -> FieldElement:
    """Read ``"0"``, ``"s^k"`` (also ``"s"``), or ``"(c1,...,cn)"`` in ``basis``.

    Tuples default to the polynomial basis when no basis is given.
    """
    compact = text.strip().replace(" ", "")
    if compact == "0":
        return ctx.zero
    match = _POWER.match(compact)
    if match is not None:
        return ctx.power(int(match.group(1)) if match.group(1) else 1)
    if compact.startswith("(") and compact.endswith(")"):
        try:
            coords = [int(c) for c in compact[1:-1].split(",") if c != ""]
        except ValueError as err:
            raise ParseError(f"Cannot parse element tuple {text!r}.") from err
        return compose(coords, basis if basis is not None else Basis.polynomial(ctx))
    raise ParseError(f"Cannot parse element {text!r}; expected 0, s^k or (c1,...,cn).")
