from __future__ import annotations

from typing import List

import numpy as np
import pytest

from phasevault.config.tolerance import ToleranceConfig
from phasevault.core.exceptions import NotHermitian, SingularPKernel
from phasevault.operators.base import Operator, hermiticity_error
from phasevault.operators.pauli import displacement, weyl_sum
from phasevault.operators.space import PhasePoint, QuditSpace, single_qudit_space
from phasevault.quasidist.grid import QuasiDistGrid, SOrder
from phasevault.quasidist.kernel import (
    displacement_traces,
    hermitian_weyl_sum,
    kernel,
    kernel_coefficients,
    q_function,
    quasidist,
    reconstruct,
)
from phasevault.states.coherent import default_fiducial
from phasevault.states.reference import qubit_reference


def all_points(space: QuditSpace) -> List[PhasePoint]:
    return [PhasePoint(space.element(i), space.element(j)) for i in range(space.dim) for j in range(space.dim)]


@pytest.mark.parametrize("s", [-1, 0, 1])
def test_kernels_are_displaced_copies_of_the_origin(d5: QuditSpace, s: int) -> None:
    base = kernel(d5, s, PhasePoint.origin(d5.ctx)).op
    for point in all_points(d5)[::3]:
        shift = displacement(d5, point)
        assert kernel(d5, s, point).op.max_distance(shift @ base @ shift.dagger()) < 1e-10


@pytest.mark.parametrize("s", [-1, 0, 1])
def test_dual_kernels_are_trace_orthogonal(d5: QuditSpace, s: int) -> None:
    points = all_points(d5)
    left = np.stack([kernel(d5, s, p).op.matrix for p in points])
    right = np.stack([kernel(d5, -s, p).op.matrix for p in points])
    gram = np.einsum("aij,bji->ab", left, right)
    np.testing.assert_allclose(gram, 5 * np.eye(25), atol=1e-10 if s == 0 else 1e-9)


def test_wigner_kernel_at_origin_is_parity(gf27_space: QuditSpace) -> None:
    w = kernel(gf27_space, SOrder.WIGNER, PhasePoint.origin(gf27_space.ctx)).op
    negation = np.zeros((27, 27))
    negation[gf27_space.negation, np.arange(27)] = 1.0
    assert w.max_distance(negation) < 1e-11


def test_q_kernel_at_origin_is_the_fiducial_projector(d7: QuditSpace) -> None:
    q = kernel(d7, SOrder.Q, PhasePoint.origin(d7.ctx)).op
    assert q.max_distance(default_fiducial(d7).density()) < 1e-10


@pytest.mark.parametrize("s", [-1, 0, 1])
def test_grid_matches_kernel_traces(d5: QuditSpace, density_factory, s: int) -> None:  # type: ignore[no-untyped-def]
    rho = density_factory(d5)
    grid = quasidist(rho, s)
    point = PhasePoint.from_ints(d5.ctx, 3, 1)
    expected = np.trace(rho.matrix @ kernel(d5, s, point).op.matrix)
    assert grid.value_at(point) == pytest.approx(expected.real, abs=1e-10)
    assert grid.total == pytest.approx(5.0)


@pytest.mark.parametrize("s", [-1, 0, 1])
def test_reconstruction(d5: QuditSpace, density_factory, s: int) -> None:  # type: ignore[no-untyped-def]
    for _ in range(5):
        rho = density_factory(d5)
        assert reconstruct(quasidist(rho, s)).max_distance(rho) < (1e-10 if s == 0 else 1e-9)


@pytest.mark.parametrize("fixture", ["qutrit", "gf8_space", "gf27_space"])
@pytest.mark.parametrize("s", [-1, 0])
def test_maximally_mixed_state_is_uniform(fixture: str, s: int, request: pytest.FixtureRequest) -> None:
    space: QuditSpace = request.getfixturevalue(fixture)
    mixed = Operator(np.eye(space.dim) / space.dim, space)
    grid = quasidist(mixed, s)
    assert grid.is_real
    np.testing.assert_allclose(grid.values, np.full((space.dim, space.dim), 1 / space.dim), atol=1e-12)


def test_q_function_by_overlaps(gf27_space: QuditSpace, density_factory) -> None:  # type: ignore[no-untyped-def]
    rho = density_factory(gf27_space)
    direct = q_function(rho)
    assert direct.s is SOrder.Q
    assert direct.max_distance(quasidist(rho, -1)) < 1e-10
    assert float(np.min(direct.values)) >= 0.0


def test_p_kernel_needs_nonvanishing_overlaps() -> None:
    qubit = single_qudit_space(2)
    with pytest.raises(SingularPKernel):
        quasidist(qubit_reference().density(), SOrder.P)


def test_displacement_traces(d7: QuditSpace) -> None:
    point = PhasePoint.from_ints(d7.ctx, 2, 4)
    traces = displacement_traces(d7, displacement(d7, point).dagger().matrix)
    expected = np.zeros((7, 7))
    expected[d7.index(point.mu), d7.index(point.nu)] = 7
    np.testing.assert_allclose(traces, expected, atol=1e-10)


def test_operator_without_space_needs_one(d5: QuditSpace) -> None:
    with pytest.raises(ValueError):
        quasidist(Operator(np.eye(5) / 5), 0)
    grid = quasidist(Operator(np.eye(5) / 5), 0, space=d5)
    assert isinstance(grid, QuasiDistGrid)


@pytest.mark.parametrize(
    "fixture, s",
    [("d5", -1), ("d5", 0), ("d5", 1), ("gf8_space", -1), ("gf8_space", 0)],
)
def test_kernel_sums_are_hermitian_before_tagging(fixture: str, s: int, request: pytest.FixtureRequest) -> None:
    space: QuditSpace = request.getfixturevalue(fixture)
    for point in all_points(space)[::7]:
        matrix = weyl_sum(space, kernel_coefficients(space, s, point))
        assert hermiticity_error(matrix) / max(1.0, float(np.max(np.abs(matrix)))) < 1e-12


def test_non_hermitian_weyl_sum_is_refused(d5: QuditSpace, rng: np.random.Generator) -> None:
    coefficients = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    with pytest.raises(NotHermitian):
        hermitian_weyl_sum(d5, coefficients)


def test_grid_tolerance_decides_real_storage(d5: QuditSpace) -> None:
    # Every entry carries an imaginary part of 2e-12.
    phased = Operator(np.eye(5) * (1 + 1e-11j) / 5, d5)
    strict = ToleranceConfig(grid=1e-13)
    assert quasidist(phased, 0).is_real
    assert not quasidist(phased, 0, tolerances=strict).is_real
    assert q_function(phased).is_real
    assert not q_function(phased, tolerances=strict).is_real


def test_kernel_carries_its_tolerances(d5: QuditSpace) -> None:
    loose = ToleranceConfig(hermitian=1e-9)
    assert kernel(d5, 0, PhasePoint.origin(d5.ctx), tolerances=loose).op.tolerances == loose
