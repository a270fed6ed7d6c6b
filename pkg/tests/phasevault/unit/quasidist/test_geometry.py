from __future__ import annotations

import numpy as np
import pytest

from phasevault.config.tolerance import ToleranceConfig
from phasevault.operators.fourier import fourier
from phasevault.operators.base import Operator
from phasevault.operators.pauli import displacement
from phasevault.operators.space import PhasePoint, QuditSpace
from phasevault.operators.squeeze import squeeze_operator
from phasevault.quasidist.geometry import (
    axis_sum,
    line_family,
    line_sum,
    marginal,
    reflected_line,
    squeeze_grid,
    translate_grid,
)
from phasevault.quasidist.grid import SOrder
from phasevault.quasidist.kernel import quasidist
from phasevault.states.coherent import squeezed_state
from phasevault.states.reference import reference_state


def test_marginals_are_basis_probabilities(d7: QuditSpace, density_factory) -> None:  # type: ignore[no-untyped-def]
    rho = density_factory(d7)
    grid = quasidist(rho, 0)
    f = fourier(d7)
    np.testing.assert_allclose(marginal(grid, "vertical"), np.real(np.diag(rho.matrix)), atol=1e-12)
    np.testing.assert_allclose(
        marginal(grid, "horizontal"), np.real(np.diag((f.dagger() @ rho @ f).matrix)), atol=1e-12
    )
    with pytest.raises(ValueError):
        marginal(grid, "diagonal")  # type: ignore[arg-type]


def test_reflected_line(d7: QuditSpace) -> None:
    ctx = d7.ctx
    slope, intercept = reflected_line(ctx.scalar(2), ctx.scalar(3))
    # 2^-1 = 4 mod 7
    assert slope == ctx.scalar(-4)
    assert intercept == ctx.scalar(12)


@pytest.mark.parametrize("d", [5, 7])
def test_reference_grid_is_symmetric_under_line_reflection(d: int) -> None:
    grid = quasidist(reference_state(d).density(), 0)
    ctx = grid.space.ctx
    for alpha in (ctx.scalar(k) for k in range(1, d)):
        for beta in (ctx.scalar(k) for k in range(d)):
            assert line_sum(grid, alpha, beta) == pytest.approx(line_sum(grid, *reflected_line(alpha, beta)), abs=1e-12)
        mirrored = np.sort_complex(np.array(line_family(grid, -alpha.inverse())))
        np.testing.assert_allclose(np.sort_complex(np.array(line_family(grid, alpha))), mirrored, atol=1e-12)


def test_vertical_line_sum_is_a_column_probability(d5: QuditSpace, density_factory) -> None:  # type: ignore[no-untyped-def]
    rho = density_factory(d5)
    grid = quasidist(rho, 0)
    ctx = d5.ctx
    total = sum(line_sum(grid, ctx.zero, ctx.scalar(k), vertical=True) for k in range(5))
    assert total == pytest.approx(5.0)


def test_squeezing_swaps_axis_sums(d7: QuditSpace) -> None:
    ctx = d7.ctx
    for k in (2, 3):
        squeezed = quasidist(squeezed_state(d7, ctx.scalar(k)).density(), 0)
        unsqueezed = quasidist(squeezed_state(d7, ctx.scalar(k).inverse()).density(), 0)
        assert axis_sum(squeezed, "mu") == pytest.approx(axis_sum(unsqueezed, "nu"), abs=1e-12)


def test_translate_grid_follows_displacement(d5: QuditSpace, density_factory) -> None:  # type: ignore[no-untyped-def]
    rho = density_factory(d5)
    point = PhasePoint.from_ints(d5.ctx, 1, 3)
    shift = displacement(d5, point)
    moved = quasidist(shift @ rho @ shift.dagger(), 0)
    assert translate_grid(quasidist(rho, 0), point).max_distance(moved) < 1e-12


def test_squeeze_grid_is_a_relabelling_for_odd_d(d7: QuditSpace, density_factory) -> None:  # type: ignore[no-untyped-def]
    rho = density_factory(d7)
    grid = quasidist(rho, 0)
    ctx = d7.ctx
    squeeze = ctx.scalar(3)
    s = squeeze_operator(d7, squeeze)
    moved = quasidist(s @ rho @ s.dagger(), 0)
    assert squeeze_grid(grid, squeeze).max_distance(moved) < 1e-10
    mu, nu = ctx.scalar(2), ctx.scalar(5)
    assert moved.value_at(PhasePoint(mu, nu)) == pytest.approx(
        grid.value_at(PhasePoint(squeeze.inverse() * mu, squeeze * nu)), abs=1e-10
    )


def test_squeeze_grid_carries_qubit_signs(gf8_space: QuditSpace, density_factory) -> None:  # type: ignore[no-untyped-def]
    rho = density_factory(gf8_space)
    grid = quasidist(rho, 0)
    for k in range(7):
        squeeze = gf8_space.ctx.power(k)
        s = squeeze_operator(gf8_space, squeeze)
        assert squeeze_grid(grid, squeeze).max_distance(quasidist(s @ rho @ s.dagger(), 0)) < 1e-10


def test_squeeze_grid_needs_a_wigner_grid(qutrit: QuditSpace, density_factory) -> None:  # type: ignore[no-untyped-def]
    grid = quasidist(density_factory(qutrit), SOrder.Q)
    with pytest.raises(ValueError):
        squeeze_grid(grid, qutrit.ctx.one)


def test_line_sums_follow_the_grid_storage(d5: QuditSpace) -> None:
    phased = Operator(np.eye(5) * (1 + 1e-11j) / 5, d5)
    one, zero = d5.ctx.one, d5.ctx.zero
    real_grid = quasidist(phased, 0)
    complex_grid = quasidist(phased, 0, tolerances=ToleranceConfig(grid=1e-13))
    assert type(line_sum(real_grid, one, zero)) is float
    assert type(axis_sum(real_grid, "mu")) is float
    assert type(line_sum(complex_grid, one, zero)) is complex
    assert line_sum(real_grid, one, zero) == pytest.approx(1.0)
