from __future__ import annotations

import numpy as np
import pytest

from phasevault.core.exceptions import ContextMismatch
from phasevault.field.core import FieldContext
from phasevault.operators.space import PhasePoint, QuditSpace
from phasevault.quasidist.crosscheck import cross_check_reference_wigner, wigner_reference_approx
from phasevault.quasidist.grid import Normalization, QuasiDistGrid, SOrder
from phasevault.quasidist.kernel import q_function
from phasevault.states.reference import reference_state


def test_grid_shape_and_realness(qutrit: QuditSpace) -> None:
    with pytest.raises(ValueError):
        QuasiDistGrid(np.zeros((2, 2)), SOrder.WIGNER, qutrit)
    grid = QuasiDistGrid(np.ones((3, 3)) + 1e-14j, 0, qutrit)
    assert grid.is_real
    assert grid.s is SOrder.WIGNER
    assert not QuasiDistGrid(np.ones((3, 3)) * 1j, 0, qutrit).is_real


def test_unit_sum(qutrit: QuditSpace) -> None:
    grid = QuasiDistGrid(np.full((3, 3), 1 / 3), SOrder.Q, qutrit)
    unit = grid.unit_sum()
    assert unit.normalization is Normalization.UNIT_SUM
    assert unit.total == pytest.approx(1.0)
    assert unit.unit_sum() is unit


def test_value_at_rejects_foreign_points(qutrit: QuditSpace, gf4: FieldContext) -> None:
    grid = QuasiDistGrid(np.zeros((3, 3)), SOrder.Q, qutrit)
    with pytest.raises(ContextMismatch):
        grid.value_at(PhasePoint.origin(gf4))


def test_reference_q_function_peaks_at_the_origin(d7: QuditSpace) -> None:
    values = np.real(q_function(reference_state(7).density()).values)
    origin = d7.index(d7.ctx.zero)
    assert np.unravel_index(int(np.argmax(values)), values.shape) == (origin, origin)
    assert values.min() >= 0.0
    rotated = values[np.ix_(d7.negation, np.arange(7))].T
    np.testing.assert_allclose(values, rotated, atol=1e-12)


def test_closed_forms_are_compared_not_trusted() -> None:
    report = cross_check_reference_wigner(7)
    assert report.d == 7
    assert report.worst == max(report.closed_form_error, report.approx_error)
    assert np.all(np.isfinite(wigner_reference_approx(7)))
