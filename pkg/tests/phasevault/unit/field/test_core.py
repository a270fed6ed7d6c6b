from __future__ import annotations

import cmath
from typing import Iterator

import numpy as np
import pytest

from phasevault.core.exceptions import ContextMismatch, NotPrime, NotPrimitiveRoot, Reducible, SizeCapExceeded, ZeroInverse
from phasevault.field.core import FieldContext, add, character, invert, make_field, mul, trace


def test_gf4_table(gf4: FieldContext) -> None:
    sigma = gf4.sigma
    assert sigma**2 == sigma + gf4.one
    assert sigma**3 == gf4.one
    assert sigma.inverse() == sigma**2
    assert [e.label for e in gf4.elements()] == ["0", "s^0", "s^1", "s^2"]


def test_element_codes_follow_coefficients(gf27: FieldContext) -> None:
    element = gf27.from_coeffs([1, 0, 2])
    assert element.code == 1 + 2 * 9
    assert element.coeffs == (1, 0, 2)


@pytest.mark.parametrize("fixture", ["gf4", "gf8", "gf9", "gf27"])
def test_field_axioms_hold_exhaustively(fixture: str, request: pytest.FixtureRequest) -> None:
    ctx: FieldContext = request.getfixturevalue(fixture)
    a = np.arange(ctx.order)[:, None, None]
    b = np.arange(ctx.order)[None, :, None]
    c = np.arange(ctx.order)[None, None, :]
    np.testing.assert_array_equal(ctx.mul_codes(ctx.mul_codes(a, b), c), ctx.mul_codes(a, ctx.mul_codes(b, c)))
    np.testing.assert_array_equal(
        ctx.mul_codes(a, ctx.add_codes(b, c)), ctx.add_codes(ctx.mul_codes(a, b), ctx.mul_codes(a, c))
    )
    units = np.arange(1, ctx.order)
    np.testing.assert_array_equal(ctx.mul_codes(units, ctx.inv_codes(units)), np.ones_like(units))


def test_free_functions_agree_with_operators(gf9: FieldContext) -> None:
    x, y = gf9.power(3), gf9.power(5)
    assert add(x, y) == x + y
    assert mul(x, y) == x * y
    assert invert(x) == x.inverse()
    assert trace(x) == x.trace()
    assert character(x) == pytest.approx(cmath.exp(2j * cmath.pi * x.trace() / 3))


def test_trace_lands_in_prime_field_and_is_additive(gf27: FieldContext) -> None:
    codes = np.arange(gf27.order)
    traces = gf27.trace_codes(codes)
    assert set(traces.tolist()) == {0, 1, 2}
    sums = gf27.add_codes(codes[:, None], codes[None, :])
    np.testing.assert_array_equal(gf27.trace_codes(sums), (traces[:, None] + traces[None, :]) % 3)


def test_gf8_unit_traces(gf8: FieldContext) -> None:
    assert [k for k in range(7) if gf8.power(k).trace() == 1] == [0, 3, 5, 6]


def test_character_sums_vanish_off_zero(gf9: FieldContext) -> None:
    codes = np.arange(gf9.order)
    table = gf9.character_codes(gf9.mul_codes(codes[:, None], codes[None, :]))
    sums = table.sum(axis=1)
    assert sums[0] == pytest.approx(9)
    np.testing.assert_allclose(sums[1:], 0, atol=1e-12)


def test_zero_has_no_inverse(gf4: FieldContext) -> None:
    with pytest.raises(ZeroInverse):
        gf4.zero.inverse()
    with pytest.raises(ZeroInverse):
        _ = gf4.zero**-1


def test_elements_of_different_fields_do_not_mix(gf4: FieldContext, gf9: FieldContext) -> None:
    with pytest.raises(ContextMismatch):
        _ = gf4.sigma + gf9.sigma


def test_make_field_rejects_composite_characteristic() -> None:
    with pytest.raises(NotPrime):
        make_field(4, 1)


def test_make_field_rejects_reducible_polynomial() -> None:
    with pytest.raises(Reducible):
        make_field(2, 2, "x^2+1")


def test_non_primitive_polynomial_warns_and_searches() -> None:
    with pytest.warns(NotPrimitiveRoot):
        ctx = make_field(3, 2, "x^2+1")
    assert ctx.order == 9
    assert sorted(ctx.antilog.tolist()) == list(range(1, 9))


@pytest.fixture
def small_cap(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    monkeypatch.setenv("QPS_SIZE_CAP", "16")
    yield


def test_size_cap_from_environment(small_cap: None) -> None:
    with pytest.raises(SizeCapExceeded):
        make_field(3, 3)
    assert make_field(2, 4).order == 16


def test_explicit_size_cap_wins_over_environment(small_cap: None) -> None:
    assert make_field(3, 3, size_cap=27).order == 27
