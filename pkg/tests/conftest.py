from __future__ import annotations

import numpy as np
import pytest

from phasevault.field.basis import Basis
from phasevault.field.core import FieldContext, make_field
from phasevault.operators.base import Operator
from phasevault.operators.space import QuditSpace, single_qudit_space


@pytest.fixture(scope="module")
def gf4() -> FieldContext:
    return make_field(2, 2, "x^2+x+1")


@pytest.fixture(scope="module")
def gf8() -> FieldContext:
    return make_field(2, 3, "x^3+x+1")


@pytest.fixture(scope="module")
def gf9() -> FieldContext:
    """No selfdual basis exists here; the default labelling is the polynomial basis."""
    return make_field(3, 2, "x^2+x+2")


@pytest.fixture(scope="module")
def gf27() -> FieldContext:
    return make_field(3, 3, "x^3+2x^2+1")


@pytest.fixture(scope="module")
def gf8_space(gf8: FieldContext) -> QuditSpace:
    return QuditSpace(gf8, Basis.custom(gf8, ["s^3", "s^5", "s^6"]))


@pytest.fixture(scope="module")
def gf27_space(gf27: FieldContext) -> QuditSpace:
    return QuditSpace(gf27, Basis.custom(gf27, ["s^1", "s^3", "s^9"]))


@pytest.fixture(scope="module")
def qutrit() -> QuditSpace:
    return single_qudit_space(3)


@pytest.fixture(scope="module")
def d5() -> QuditSpace:
    return single_qudit_space(5)


@pytest.fixture(scope="module")
def d7() -> QuditSpace:
    return single_qudit_space(7)


@pytest.fixture(scope="module")
def d31() -> QuditSpace:
    return single_qudit_space(31)


@pytest.fixture(scope="function")
def rng() -> np.random.Generator:
    return np.random.default_rng(1992)


def random_density(space: QuditSpace, rng: np.random.Generator) -> Operator:
    shape = (space.dim, space.dim)
    g = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    rho = g @ g.conj().T
    return Operator(rho / np.trace(rho).real, space, label="rho")


@pytest.fixture(scope="function")
def density_factory(rng: np.random.Generator):  # type: ignore[no-untyped-def]
    """Draws random full-rank density operators on a given space."""
    return lambda space: random_density(space, rng)
