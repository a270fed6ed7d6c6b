"""Lines, marginals and rigid motions of phase-space grids."""

from __future__ import annotations

from typing import Dict, List, Literal, Tuple, Union

import numpy as np

from phasevault._types._alias import RealArray
from phasevault.core.exceptions import ContextMismatch, ZeroSqueeze
from phasevault.field.core import FieldElement
from phasevault.operators.space import PhasePoint
from phasevault.quasidist.grid import QuasiDistGrid, SOrder

__all__ = [
    "MARGINAL_AXIS_MAP",
    "line_sum",
    "line_family",
    "reflected_line",
    "axis_sum",
    "marginal",
    "translate_grid",
    "squeeze_grid",
]

Axis = Literal["horizontal", "vertical"]

# Summing over nu at fixed mu gives <mu|F^dag rho F|mu>; summing over mu at
# fixed nu gives <nu|rho|nu>.
MARGINAL_AXIS_MAP: Dict[str, str] = {"horizontal": "fourier", "vertical": "computational"}


def _check(grid: QuasiDistGrid, *elements: FieldElement) -> None:
    for element in elements:
        if element.ctx != grid.space.ctx:
            raise ContextMismatch(f"{element} does not belong to the grid's field.")


def _scalar(grid: QuasiDistGrid, value: complex) -> Union[float, complex]:
    return float(np.real(value)) if grid.is_real else complex(value)


def line_sum(
    grid: QuasiDistGrid, alpha: FieldElement, beta: FieldElement, vertical: bool = False
) -> Union[float, complex]:
    """Sum over nu = alpha mu + beta, or over mu = beta when ``vertical``.

    A float for real grids, complex otherwise.
    """
    _check(grid, alpha, beta)
    space = grid.space
    if vertical:
        return _scalar(grid, np.sum(grid.values[space.index(beta), :]))
    ctx = space.ctx
    on_line = space.index_of[ctx.add_codes(ctx.mul_codes(alpha.code, space.codes), beta.code)]
    return _scalar(grid, np.sum(grid.values[np.arange(space.dim), on_line]))


def line_family(grid: QuasiDistGrid, alpha: FieldElement) -> List[Union[float, complex]]:
    """Sums over every line of slope ``alpha``, intercepts in space index order."""
    return [line_sum(grid, alpha, grid.space.element(i)) for i in range(grid.space.dim)]


def reflected_line(alpha: FieldElement, beta: FieldElement) -> Tuple[FieldElement, FieldElement]:
    """Image of nu = alpha mu + beta under (mu, nu) -> (nu, -mu): slope -alpha^-1, intercept alpha^-1 beta."""
    inverse = alpha.inverse()
    return -inverse, inverse * beta


def axis_sum(grid: QuasiDistGrid, axis: Literal["mu", "nu"]) -> Union[float, complex]:
    """Sum along the mu axis (nu = 0) or the nu axis (mu = 0)."""
    origin = grid.space.index(grid.space.ctx.zero)
    if axis == "mu":
        return _scalar(grid, np.sum(grid.values[:, origin]))
    if axis == "nu":
        return _scalar(grid, np.sum(grid.values[origin, :]))
    raise ValueError(f"axis must be 'mu' or 'nu', got {axis!r}.")


def marginal(grid: QuasiDistGrid, axis: Axis) -> RealArray:
    """Sum over one label divided by d^n; see :data:`MARGINAL_AXIS_MAP`."""
    values = np.real(grid.values)
    if axis == "horizontal":
        return np.sum(values, axis=1) / grid.space.dim
    if axis == "vertical":
        return np.sum(values, axis=0) / grid.space.dim
    raise ValueError(f"axis must be 'horizontal' or 'vertical', got {axis!r}.")


def translate_grid(grid: QuasiDistGrid, point: PhasePoint) -> QuasiDistGrid:
    """Grid of D rho D^dag: W'(mu, nu) = W(mu - alpha, nu - beta)."""
    _check(grid, point.mu, point.nu)
    space, ctx = grid.space, grid.space.ctx
    rows = space.index_of[ctx.sub_codes(space.codes, point.mu.code)]
    cols = space.index_of[ctx.sub_codes(space.codes, point.nu.code)]
    return QuasiDistGrid(grid.values[np.ix_(rows, cols)], grid.s, space, tolerances=grid.tolerances)


def squeeze_grid(grid: QuasiDistGrid, squeeze: FieldElement) -> QuasiDistGrid:
    """Wigner grid of S rho S^dag from the grid of rho.

    S^dag D(k, l) S = e(k, l) D(squeeze^-1 k, squeeze l) with e = 1 for odd d,
    where the result is the pure relabelling W'(mu, nu) = W(squeeze^-1 mu,
    squeeze nu). Qubit displacement phases pick up signs e = +-1, which are
    carried through the displacement traces.
    """
    if grid.s is not SOrder.WIGNER:
        raise ValueError("Squeeze geometry is a property of the Wigner function (s = 0).")
    _check(grid, squeeze)
    if squeeze.is_zero:
        raise ZeroSqueeze()
    space, ctx = grid.space, grid.space.ctx
    inverse = ctx.inv_codes(squeeze.code)
    shrink = space.index_of[ctx.mul_codes(inverse, space.codes)]
    stretch = space.index_of[ctx.mul_codes(squeeze.code, space.codes)]
    phases = space.displacement_phases
    signs = phases / phases[np.ix_(shrink, stretch)]
    if np.allclose(signs, 1.0, rtol=0.0, atol=1e-15):
        return QuasiDistGrid(grid.values[np.ix_(shrink, stretch)], grid.s, space, tolerances=grid.tolerances)

    xi = space.character_table
    values = np.asarray(grid.values, dtype=np.complex128)
    traces = (xi.conj() @ values @ xi).T / space.dim
    moved = signs * traces[np.ix_(shrink, stretch)]
    return QuasiDistGrid((xi @ moved.T @ xi.conj()) / space.dim, grid.s, space, tolerances=grid.tolerances)
