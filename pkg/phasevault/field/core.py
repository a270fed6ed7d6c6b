"""GF(d^n) arithmetic through precomputed tables.

An element is identified by its *code* ``sum_i c_i d^i`` where ``c_i`` is the
coefficient of ``x^i`` in the polynomial basis. Addition works digit-wise,
multiplication through discrete logarithms to the base sigma. All ``*_codes``
methods are vectorized over numpy integer arrays and are what the operator
layer uses; :class:`FieldElement` wraps single codes for user-facing code.
"""

from __future__ import annotations

import cmath
import logging
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, List, Sequence, Tuple, Union

import numpy as np
from sympy import isprime

from phasevault._types._alias import ComplexArray, Coordinates, IntArray
from phasevault.config.global_ import resolve_size_cap
from phasevault.core.exceptions import (
    ContextMismatch,
    NotPrime,
    NotPrimitiveRoot,
    Reducible,
    SizeCapExceeded,
    ZeroInverse,
)
from phasevault.field.polynomial import (
    Polynomial,
    find_primitive_polynomial,
    is_irreducible,
    parse_polynomial,
    powers_of_root,
)

__all__ = [
    "FieldContext",
    "FieldElement",
    "make_field",
    "add",
    "mul",
    "invert",
    "trace",
    "character",
]

logger = logging.getLogger(__name__)

CodeLike = Union[int, np.integer, IntArray]


@dataclass(frozen=True, eq=False)
class FieldContext:
    """Immutable tables for one concrete representation of GF(d^n).

    Two contexts compare equal when they share d, the polynomial and sigma;
    elements from unequal contexts refuse to combine.
    """

    poly: Polynomial
    antilog: IntArray = field(repr=False)

    log: IntArray = field(init=False, repr=False)
    digits: IntArray = field(init=False, repr=False)
    trace_table: IntArray = field(init=False, repr=False)
    roots_of_unity: ComplexArray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        d, n = self.poly.d, self.poly.degree
        q = d**n
        if self.antilog.shape != (q - 1,) or sorted(self.antilog.tolist()) != list(range(1, q)):
            raise ValueError("antilog must enumerate every nonzero element exactly once.")

        log = np.full(q, -1, dtype=np.int64)
        log[self.antilog] = np.arange(q - 1, dtype=np.int64)

        codes = np.arange(q, dtype=np.int64)
        digits = np.stack([(codes // d**i) % d for i in range(n)], axis=1)

        # tr(lambda) = sum_k lambda^(d^k); the sum lands in the prime field (digit 0).
        exponents = np.arange(q - 1, dtype=np.int64)
        conjugate_digits = np.zeros((q - 1, n), dtype=np.int64)
        for k in range(n):
            conjugate_digits += digits[self.antilog[(exponents * d**k) % (q - 1)]]
        conjugate_digits %= d
        if np.any(conjugate_digits[:, 1:]):
            raise ArithmeticError("Trace left the prime field; the antilog table is inconsistent.")
        trace_table = np.zeros(q, dtype=np.int64)
        trace_table[self.antilog] = conjugate_digits[:, 0]

        # Built once so that equal phases are bit-identical everywhere.
        roots = np.array([cmath.exp(2j * cmath.pi * t / d) for t in range(d)], dtype=np.complex128)

        for name, table in (("log", log), ("digits", digits), ("trace_table", trace_table), ("roots_of_unity", roots)):
            table.setflags(write=False)
            object.__setattr__(self, name, table)
        self.antilog.setflags(write=False)

    @property
    def d(self) -> int:
        return self.poly.d

    @property
    def n(self) -> int:
        return self.poly.degree

    @property
    def order(self) -> int:
        """Number of elements, d^n."""
        return self.poly.d**self.poly.degree

    @property
    def sigma_code(self) -> int:
        return int(self.antilog[1]) if self.order > 2 else 1

    @cached_property
    def powers(self) -> IntArray:
        return np.array([self.d**i for i in range(self.n)], dtype=np.int64)

    @property
    def key(self) -> Tuple[int, Tuple[int, ...], int]:
        return (self.d, self.poly.coeffs, self.sigma_code)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldContext):
            return NotImplemented
        return self is other or self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"FieldContext(GF({self.d}^{self.n}), poly={self.poly}, sigma_code={self.sigma_code})"

    # -- element constructors -------------------------------------------------

    def element(self, code: int) -> FieldElement:
        return FieldElement(self, int(code))

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        if len(coeffs) != self.n:
            raise ValueError(f"Expected {self.n} polynomial coefficients, got {len(coeffs)}.")
        return FieldElement(self, int(sum((int(c) % self.d) * self.d**i for i, c in enumerate(coeffs))))

    def power(self, k: int) -> FieldElement:
        """sigma^k, for any integer k."""
        return FieldElement(self, int(self.antilog[k % (self.order - 1)]))

    def scalar(self, k: int) -> FieldElement:
        """The prime-field element k mod d."""
        return FieldElement(self, int(k) % self.d)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def sigma(self) -> FieldElement:
        return FieldElement(self, self.sigma_code)

    def elements(self) -> Iterator[FieldElement]:
        """All elements in code order."""
        for code in range(self.order):
            yield FieldElement(self, code)

    # -- vectorized arithmetic on codes ---------------------------------------

    def add_codes(self, a: CodeLike, b: CodeLike) -> IntArray:
        return ((self.digits[a] + self.digits[b]) % self.d) @ self.powers

    def neg_codes(self, a: CodeLike) -> IntArray:
        return ((-self.digits[a]) % self.d) @ self.powers

    def sub_codes(self, a: CodeLike, b: CodeLike) -> IntArray:
        return ((self.digits[a] - self.digits[b]) % self.d) @ self.powers

    def scale_codes(self, k: int, a: CodeLike) -> IntArray:
        """Multiply by the prime-field integer k."""
        return ((k * self.digits[a]) % self.d) @ self.powers

    def mul_codes(self, a: CodeLike, b: CodeLike) -> IntArray:
        a_arr, b_arr = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        product = self.antilog[(self.log[a_arr] + self.log[b_arr]) % (self.order - 1)]
        return np.where((a_arr == 0) | (b_arr == 0), 0, product)

    def inv_codes(self, a: CodeLike) -> IntArray:
        a_arr = np.asarray(a, dtype=np.int64)
        if np.any(a_arr == 0):
            raise ZeroInverse()
        return self.antilog[(-self.log[a_arr]) % (self.order - 1)]

    def trace_codes(self, a: CodeLike) -> IntArray:
        return self.trace_table[a]

    def character_codes(self, a: CodeLike) -> ComplexArray:
        return self.roots_of_unity[self.trace_table[a]]

    def pair_trace(self, a: CodeLike, b: CodeLike) -> IntArray:
        """tr(a b), the bilinear form every phase in the library is built from."""
        return self.trace_table[self.mul_codes(a, b)]


@dataclass(frozen=True)
class FieldElement:
    ctx: FieldContext = field(repr=False)
    code: int

    def __post_init__(self) -> None:
        if not 0 <= self.code < self.ctx.order:
            raise ValueError(f"Code {self.code} is outside GF({self.ctx.d}^{self.ctx.n}).")

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"Expected a FieldElement, got {type(other).__name__}.")
        if other.ctx != self.ctx:
            raise ContextMismatch(f"Elements of {self.ctx!r} and {other.ctx!r} cannot be combined.")

    @property
    def coeffs(self) -> Coordinates:
        return tuple(int(c) for c in self.ctx.digits[self.code])

    @property
    def is_zero(self) -> bool:
        return self.code == 0

    @property
    def log(self) -> Union[int, None]:
        """Discrete logarithm to the base sigma; ``None`` for zero."""
        return None if self.code == 0 else int(self.ctx.log[self.code])

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.ctx, int(self.ctx.add_codes(self.code, other.code)))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.ctx, int(self.ctx.sub_codes(self.code, other.code)))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.ctx, int(self.ctx.neg_codes(self.code)))

    def __mul__(self, other: Union[FieldElement, int]) -> FieldElement:
        if isinstance(other, (int, np.integer)):
            return FieldElement(self.ctx, int(self.ctx.scale_codes(int(other), self.code)))
        self._check(other)
        return FieldElement(self.ctx, int(self.ctx.mul_codes(self.code, other.code)))

    __rmul__ = __mul__

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inverse()

    def __pow__(self, k: int) -> FieldElement:
        if self.code == 0:
            if k < 0:
                raise ZeroInverse()
            return self if k > 0 else self.ctx.one
        return self.ctx.power(int(self.ctx.log[self.code]) * k)

    def inverse(self) -> FieldElement:
        return FieldElement(self.ctx, int(self.ctx.inv_codes(self.code)))

    def trace(self) -> int:
        return int(self.ctx.trace_table[self.code])

    def character(self) -> complex:
        return complex(self.ctx.roots_of_unity[self.trace()])

    @property
    def label(self) -> str:
        return "0" if self.code == 0 else f"s^{self.log}"

    def __str__(self) -> str:
        return self.label


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def invert(a: FieldElement) -> FieldElement:
    return a.inverse()


def trace(element: FieldElement) -> int:
    return element.trace()


def character(element: FieldElement) -> complex:
    return element.character()


def _mulmod(a: List[int], b: List[int], poly: Polynomial) -> List[int]:
    d, n = poly.d, poly.degree
    full = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                full[i + j] = (full[i + j] + ai * bj) % d
    for top in range(2 * n - 2, n - 1, -1):
        carry = full[top]
        if carry:
            for i in range(n + 1):
                full[top - n + i] = (full[top - n + i] - carry * poly.coeffs[i]) % d
    return full[:n]


def _search_generator(poly: Polynomial) -> IntArray:
    """Antilog table of the first primitive element in code order."""
    d, n = poly.d, poly.degree
    q = d**n
    for candidate in range(2 if q > 2 else 1, q):
        base = [(candidate // d**i) % d for i in range(n)]
        antilog = np.empty(q - 1, dtype=np.int64)
        state = [1] + [0] * (n - 1)
        for exponent in range(q - 1):
            code = sum(c * d**i for i, c in enumerate(state))
            if exponent > 0 and code == 1:
                break
            antilog[exponent] = code
            state = _mulmod(state, base, poly)
        else:
            if state == [1] + [0] * (n - 1):
                return antilog
    raise RuntimeError(f"GF({d}^{n}) has no primitive element under {poly}; the polynomial is not irreducible.")


def make_field(
    d: int,
    n: int = 1,
    poly: Union[Polynomial, str, None] = None,
    size_cap: Union[int, None] = None,
) -> FieldContext:
    """Build GF(d^n).

    Without ``poly`` the smallest monic primitive polynomial is used. A user
    polynomial must be monic, of degree n and irreducible; if its root is not
    primitive a :class:`NotPrimitiveRoot` warning is issued and sigma becomes
    the first primitive element in code order.
    """
    if not isprime(d):
        raise NotPrime(d)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}.")
    cap = resolve_size_cap(size_cap)
    if d**n > cap:
        raise SizeCapExceeded(d, n, cap)

    if poly is None:
        chosen = find_primitive_polynomial(d, n)
    else:
        chosen = parse_polynomial(poly, d) if isinstance(poly, str) else poly
        if chosen.d != d or chosen.degree != n:
            raise ValueError(f"Polynomial {chosen} is not a degree-{n} polynomial over Z_{d}.")
        if not is_irreducible(chosen):
            raise Reducible(chosen)

    antilog = powers_of_root(chosen)
    if antilog is None:
        warnings.warn(
            f"The root of {chosen} is not a primitive element of GF({d}^{n}); sigma was found by search.",
            category=NotPrimitiveRoot,
            stacklevel=2,
        )
        antilog = _search_generator(chosen)

    ctx = FieldContext(poly=chosen, antilog=antilog)
    logger.debug("Built GF(%d^%d) with poly %s, sigma code %d", d, n, chosen, ctx.sigma_code)
    return ctx
