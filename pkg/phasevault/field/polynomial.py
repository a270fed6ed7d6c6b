"""Monic polynomials over Z_d: text format, irreducibility and primitivity.

Coefficients are stored in ascending powers, ``coeffs[i]`` multiplying
``x^i``. The search order for default polynomials compares the
non-leading coefficients ``(a_{n-1}, ..., a_0)`` lexicographically, which
is the integer order of ``sum_i a_i d^i``.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Tuple, Union

import numpy as np
from sympy import Poly, isprime, primitive_root, symbols

from phasevault._types._alias import IntArray
from phasevault.core.exceptions import NotPrime, ParseError

__all__ = [
    "Polynomial",
    "parse_polynomial",
    "is_irreducible",
    "monic_polynomials",
    "powers_of_root",
    "find_primitive_polynomial",
]

logger = logging.getLogger(__name__)

_X = symbols("x")
_TERM = re.compile(r"^(?P<coef>\d*)\*?(?:(?P<var>x)(?:\^(?P<exp>\d+))?)?$")


@dataclass(frozen=True)
class Polynomial:
    d: int
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 2:
            raise ParseError(f"Field polynomials have degree at least 1, got coefficients {self.coeffs}.")
        normalized = tuple(int(c) % self.d for c in self.coeffs)
        if normalized[-1] != 1:
            raise ParseError(f"Polynomial must be monic, leading coefficient is {normalized[-1]}.")
        object.__setattr__(self, "coeffs", normalized)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def rank(self) -> int:
        """Position in the default search order among monic polynomials of this degree."""
        return sum(c * self.d**i for i, c in enumerate(self.coeffs[:-1]))

    @cached_property
    def sympy(self) -> Poly:
        return Poly(list(reversed(self.coeffs)), _X, modulus=self.d)

    def __str__(self) -> str:
        terms: List[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            if power == 0:
                terms.append(str(c))
                continue
            head = "" if c == 1 else str(c)
            terms.append(f"{head}x" if power == 1 else f"{head}x^{power}")
        return "+".join(terms)


def parse_polynomial(text: str, d: int) -> Polynomial:
    """Parse ``"x^3+2x^2+1"``-style text; spaces and a ``*`` between coefficient and x are allowed."""
    compact = text.replace(" ", "").replace("-", "+-")
    if not compact:
        raise ParseError("Empty polynomial text.")
    collected: dict[int, int] = {}
    for raw in filter(None, compact.split("+")):
        sign = -1 if raw.startswith("-") else 1
        term = raw.lstrip("-")
        match = _TERM.match(term)
        if match is None or term == "":
            raise ParseError(f"Cannot parse term {raw!r} in polynomial {text!r}.")
        coef = int(match.group("coef")) if match.group("coef") else 1
        if match.group("var") is None:
            if not match.group("coef"):
                raise ParseError(f"Cannot parse term {raw!r} in polynomial {text!r}.")
            power = 0
        else:
            power = int(match.group("exp")) if match.group("exp") else 1
        collected[power] = collected.get(power, 0) + sign * coef
    degree = max(collected)
    coeffs = tuple(collected.get(power, 0) % d for power in range(degree + 1))
    return Polynomial(d=d, coeffs=coeffs)


def monic_polynomials(d: int, n: int) -> Iterator[Polynomial]:
    """All monic degree-n polynomials over Z_d, in the default search order."""
    for rank in range(d**n):
        lower = [(rank // d**i) % d for i in range(n)]
        yield Polynomial(d=d, coeffs=(*lower, 1))


def is_irreducible(poly: Polynomial) -> bool:
    """Exhaustive divisor test: no monic factor of degree 1..n//2 divides ``poly``."""
    if poly.degree == 1:
        return True
    if poly.coeffs[0] == 0:
        return False
    target = poly.sympy
    for k in range(1, poly.degree // 2 + 1):
        for divisor in monic_polynomials(poly.d, k):
            if target.rem(divisor.sympy).is_zero:
                return False
    return True


def _times_x(state: List[int], poly: Polynomial) -> List[int]:
    d, n = poly.d, poly.degree
    carry = state[-1]
    shifted = [0, *state[:-1]]
    return [(shifted[i] - carry * poly.coeffs[i]) % d for i in range(n)]


def powers_of_root(poly: Polynomial) -> Union[IntArray, None]:
    """Codes of x^0, x^1, ..., x^{d^n-2} reduced mod ``poly``.

    Returns ``None`` when x is not a primitive element (its order is below
    d^n - 1). The code of a residue is ``sum_i c_i d^i``.
    """
    d, n = poly.d, poly.degree
    order = d**n - 1
    weights = [d**i for i in range(n)]
    antilog = np.empty(order, dtype=np.int64)
    state = [1] + [0] * (n - 1)
    for exponent in range(order):
        code = sum(c * w for c, w in zip(state, weights))
        if exponent > 0 and code == 1:
            return None
        antilog[exponent] = code
        state = _times_x(state, poly)
    if state != [1] + [0] * (n - 1):
        return None
    return antilog


def find_primitive_polynomial(d: int, n: int) -> Polynomial:
    """Smallest monic primitive polynomial of degree n over Z_d.

    For n = 1 this is ``x - g`` with g the smallest primitive root mod d, so
    that the field generator is g itself.
    """
    if not isprime(d):
        raise NotPrime(d)
    if n == 1:
        g = int(primitive_root(d)) if d > 2 else 1
        return Polynomial(d=d, coeffs=((-g) % d, 1))
    for candidate in monic_polynomials(d, n):
        if candidate.coeffs[0] == 0:
            continue
        if not is_irreducible(candidate):
            continue
        if powers_of_root(candidate) is not None:
            logger.debug("Default polynomial for GF(%d^%d): %s", d, n, candidate)
            return candidate
    raise RuntimeError(f"No primitive polynomial of degree {n} over Z_{d}; this contradicts field theory.")
