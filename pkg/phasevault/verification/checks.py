"""The invariant suite behind ``phasevault verify``.

Each check returns an :class:`~phasevault.verification.registry.Outcome`;
exhaustive loops stay at d^n <= 27 in the default tier, and the d = 31
single-qudit checks live in the extended tier.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from phasevault.field.basis import Basis, find_selfdual_basis
from phasevault.field.core import FieldContext, FieldElement, make_field
from phasevault.operators.base import Operator, hermiticity_error, tensor
from phasevault.operators.factorization import basis_change_operator, factorize_displacement
from phasevault.operators.fourier import fourier, fourier_eigenvalues, single_qudit_fourier
from phasevault.operators.pauli import (
    displacement,
    generator_U,
    generator_V,
    parity_from_displacements,
    parity_operator,
    weyl_sum,
)
from phasevault.operators.space import PhasePoint, QuditSpace, single_qudit_space
from phasevault.operators.squeeze import squeeze_conjugation, squeeze_operator
from phasevault.quasidist.geometry import axis_sum, line_family, line_sum, marginal, reflected_line, squeeze_grid
from phasevault.quasidist.kernel import (
    displacement_traces,
    kernel,
    kernel_coefficients,
    q_function,
    quasidist,
    reconstruct,
)
from phasevault.states.coherent import coherent_state, squeezed_state
from phasevault.states.diagnostics import (
    equivalent_under_qudit_permutation,
    reduced_purity,
    squeeze_coefficient_map,
    uncertainty_product,
    uncertainty_ratio,
)
from phasevault.states.harper import harper_asymptotic, harper_energy, harper_overlap
from phasevault.states.reference import (
    multi_reference_state,
    product_state,
    reference_state,
    reference_state_theta,
    single_reference,
)
from phasevault.states.vector import StateVector, ThetaParams
from phasevault.verification.registry import Outcome, register_check

EXACT = 0.0


@lru_cache(maxsize=None)
def field_of(d: int, n: int, poly: str) -> FieldContext:
    return make_field(d, n, poly)


@lru_cache(maxsize=None)
def labelled_space(d: int, n: int, poly: str, labels: Tuple[str, ...]) -> QuditSpace:
    ctx = field_of(d, n, poly)
    return QuditSpace(ctx, Basis.custom(ctx, list(labels)))


def gf4() -> FieldContext:
    return field_of(2, 2, "x^2+x+1")


def gf8_selfdual() -> QuditSpace:
    return labelled_space(2, 3, "x^3+x+1", ("s^3", "s^5", "s^6"))


def gf9() -> FieldContext:
    return field_of(3, 2, "x^2+x+2")


def gf27_selfdual() -> QuditSpace:
    return labelled_space(3, 3, "x^3+2x^2+1", ("s^1", "s^3", "s^9"))


def weyl_spaces() -> List[QuditSpace]:
    singles = [single_qudit_space(d) for d in (2, 3, 5, 7)]
    fields = [QuditSpace.default(gf4()), gf8_selfdual(), QuditSpace.default(gf9()), gf27_selfdual()]
    return singles + fields


def max_abs(values: Iterable[float]) -> float:
    return float(max(values, default=0.0))


def distance(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def random_density(space: QuditSpace, rng: np.random.Generator) -> Operator:
    shape = (space.dim, space.dim)
    g = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    rho = g @ g.conj().T
    return Operator(rho / np.trace(rho).real, space, label="rho")


def random_state(space: QuditSpace, rng: np.random.Generator) -> StateVector:
    amps = rng.normal(size=space.dim) + 1j * rng.normal(size=space.dim)
    return StateVector.normalized(amps, space, "random")


def all_points(space: QuditSpace) -> List[PhasePoint]:
    return [PhasePoint(space.element(i), space.element(j)) for i in range(space.dim) for j in range(space.dim)]


def random_point(space: QuditSpace, rng: np.random.Generator) -> PhasePoint:
    i, j = rng.integers(space.dim, size=2)
    return PhasePoint(space.element(int(i)), space.element(int(j)))


def nonzero_elements(ctx: FieldContext) -> List[FieldElement]:
    return [ctx.power(k) for k in range(ctx.order - 1)]


# ----------------------------------------------------------------- field


@register_check("gf4_structure", "field")
def check_gf4_structure(rng: np.random.Generator) -> Outcome:
    ctx = gf4()
    sigma = ctx.sigma
    failures = []
    if sigma**2 != sigma + ctx.one:
        failures.append("s^2 != s + 1")
    if sigma.inverse() != sigma**2:
        failures.append("s^-1 != s^2")
    dual = Basis.custom(ctx, ["s^0", "s^1"]).dual
    if dual.codes != ((sigma**2).code, ctx.one.code):
        failures.append(f"dual of {{1, s}} is {dual.labels}")
    normal = Basis.normal(ctx)
    if normal.codes != (sigma.code, (sigma**2).code) or not normal.is_selfdual:
        failures.append(f"normal basis {normal.labels} is not the selfdual {{s, s^2}}")
    return Outcome(float(len(failures)), EXACT, "; ".join(failures))


@register_check("field_axioms", "field")
def check_field_axioms(rng: np.random.Generator) -> Outcome:
    failures = 0
    for ctx in (gf4(), gf8_selfdual().ctx, gf9(), gf27_selfdual().ctx):
        a = np.arange(ctx.order)[:, None, None]
        b = np.arange(ctx.order)[None, :, None]
        c = np.arange(ctx.order)[None, None, :]
        failures += int(np.sum(ctx.mul_codes(ctx.mul_codes(a, b), c) != ctx.mul_codes(a, ctx.mul_codes(b, c))))
        distributed = ctx.add_codes(ctx.mul_codes(a, b), ctx.mul_codes(a, c))
        failures += int(np.sum(ctx.mul_codes(a, ctx.add_codes(b, c)) != distributed))
        units = np.arange(1, ctx.order)
        failures += int(np.sum(ctx.mul_codes(units, ctx.inv_codes(units)) != 1))
        traces = ctx.trace_codes(np.arange(ctx.order))
        pairs = ctx.add_codes(np.arange(ctx.order)[:, None], np.arange(ctx.order)[None, :])
        failures += int(np.sum(ctx.trace_codes(pairs) != (traces[:, None] + traces[None, :]) % ctx.d))
    return Outcome(float(failures), EXACT, "associativity, distributivity, inverses, additive trace")


@register_check("character_orthogonality", "field")
def check_character_orthogonality(rng: np.random.Generator) -> Outcome:
    errors = []
    for space in weyl_spaces():
        xi = space.character_table
        errors.append(distance(xi @ xi.conj().T, space.dim * np.eye(space.dim)))
    return Outcome(max_abs(errors), 1e-10)


@register_check("selfdual_bases", "field")
def check_selfdual_bases(rng: np.random.Generator) -> Outcome:
    failures = []
    if not gf8_selfdual().basis.is_selfdual:
        failures.append("GF(8) {s^3, s^5, s^6}")
    if not gf27_selfdual().basis.is_selfdual:
        failures.append("GF(27) {s, s^3, s^9}")
    almost = find_selfdual_basis(gf9())
    if almost.labels != ["s^2", "s^4"] or np.diag(almost.gram).tolist() != [1, 2]:
        failures.append(f"GF(9) almost-selfdual basis is {almost.labels}")
    ctx8 = gf8_selfdual().ctx
    units = [k for k in range(7) if ctx8.power(k).trace() == 1]
    if units != [0, 3, 5, 6]:
        failures.append(f"GF(8) unit traces at {units}")
    return Outcome(float(len(failures)), EXACT, "; ".join(failures))


# ------------------------------------------------------------- operators


@register_check("weyl_form", "operators")
def check_weyl_form(rng: np.random.Generator) -> Outcome:
    """V_mu U_nu = chi(mu nu) U_nu V_mu, exhaustively."""
    errors = []
    for space in weyl_spaces():
        ctx = space.ctx
        shifts = [generator_U(space, space.element(j)).matrix for j in range(space.dim)]
        clocks = [generator_V(space, space.element(i)).matrix for i in range(space.dim)]
        for i, clock in enumerate(clocks):
            for j, shift in enumerate(shifts):
                phase = ctx.character_codes(ctx.mul_codes(space.codes[i], space.codes[j]))
                errors.append(distance(clock @ shift, phase * (shift @ clock)))
    return Outcome(max_abs(errors), 1e-12)


@register_check("composition_law", "operators")
def check_composition_law(rng: np.random.Generator) -> Outcome:
    """D1 D2 = chi(2^-1 (mu1 nu2 - mu2 nu1)) D(p1 + p2), plus D(0,0) = I and D^dag = D(-p)."""
    errors = []
    for d in (3, 5, 7):
        space = single_qudit_space(d)
        ctx = space.ctx
        points = all_points(space)
        ops = {(p.mu.code, p.nu.code): displacement(space, p) for p in points}
        errors.append(ops[(0, 0)].max_distance(np.eye(d)))
        half = (d + 1) // 2
        for p in points:
            first = ops[(p.mu.code, p.nu.code)]
            errors.append(first.dagger().max_distance(ops[((-p).mu.code, (-p).nu.code)]))
            for q in points:
                total = p + q
                exponent = half * (p.mu.code * q.nu.code - q.mu.code * p.nu.code)
                phase = ctx.roots_of_unity[exponent % d]
                target = phase * ops[(total.mu.code, total.nu.code)].matrix
                errors.append(distance(first.matrix @ ops[(q.mu.code, q.nu.code)].matrix, target))
    return Outcome(max_abs(errors), 1e-12)


@register_check("displacement_trace_orthogonality", "operators")
def check_trace_orthogonality(rng: np.random.Generator) -> Outcome:
    errors = []
    for space in (single_qudit_space(5), single_qudit_space(7), QuditSpace.default(gf4()), gf8_selfdual()):
        for p in all_points(space):
            traces = displacement_traces(space, displacement(space, p).dagger().matrix)
            expected = np.zeros((space.dim, space.dim))
            expected[space.index(p.mu), space.index(p.nu)] = space.dim
            errors.append(distance(traces, expected))
    return Outcome(max_abs(errors), 1e-10)


@register_check("parity_identity", "operators")
def check_parity_identity(rng: np.random.Generator) -> Outcome:
    errors = []
    spaces = [single_qudit_space(d) for d in (3, 5, 7, 11, 13)] + [gf27_selfdual()]
    for space in spaces:
        parity = parity_operator(space)
        errors.append(parity_from_displacements(space).max_distance(parity))
        origin = PhasePoint.origin(space.ctx)
        errors.append(kernel(space, 0, origin).op.max_distance(parity))
    return Outcome(max_abs(errors), 1e-11)


@register_check("fourier_transform", "operators")
def check_fourier(rng: np.random.Generator) -> Outcome:
    """F^4 = I, a four-root spectrum and F D(mu, nu) F^dag = D(nu, -mu) for odd d."""
    errors = []
    for space in (single_qudit_space(3), single_qudit_space(5), single_qudit_space(7), gf27_selfdual()):
        f = fourier(space)
        errors.append(distance(np.linalg.matrix_power(f.matrix, 4), np.eye(space.dim)))
        spectrum = fourier_eigenvalues(space)
        errors.append(abs(sum(spectrum.values()) - space.dim))
        for _ in range(20):
            p = random_point(space, rng)
            moved = displacement(space, PhasePoint(p.nu, -p.mu))
            errors.append((f @ displacement(space, p) @ f.dagger()).max_distance(moved))
    return Outcome(max_abs(errors), 1e-10)


@register_check("cnot_basis_change", "operators")
def check_cnot(rng: np.random.Generator) -> Outcome:
    ctx = gf4()
    t = basis_change_operator(ctx, Basis.custom(ctx, ["s^1", "s^3"]), Basis.custom(ctx, ["s^1", "s^2"]))
    expected = np.zeros((4, 4))
    for row, col in ((0, 0), (3, 1), (2, 2), (1, 3)):
        expected[row, col] = 1.0
    return Outcome(distance(t.matrix, expected), EXACT, "GF(4) {s, s^3} -> {s, s^2}")


@register_check("squeeze_conjugation", "operators")
def check_squeeze_conjugation(rng: np.random.Generator) -> Outcome:
    errors = []
    for space in (single_qudit_space(5), single_qudit_space(7), gf8_selfdual(), QuditSpace.default(gf9())):
        ctx = space.ctx
        for squeeze in nonzero_elements(ctx):
            s = squeeze_operator(space, squeeze)
            a, b = squeeze_conjugation(space, squeeze)
            for j in range(space.dim):
                element = space.element(j)
                errors.append((s @ generator_U(space, element) @ s.dagger()).max_distance(generator_U(space, a * element)))
                errors.append((s @ generator_V(space, element) @ s.dagger()).max_distance(generator_V(space, b * element)))
    return Outcome(max_abs(errors), 1e-12)


@register_check("selfdual_factorization", "operators")
def check_factorization(rng: np.random.Generator) -> Outcome:
    """D, F, the reference state and product-state Wigner grids split into single-qudit pieces."""
    errors = []
    for space in (gf8_selfdual(), gf27_selfdual()):
        d, n = space.d, space.n
        qudit = single_qudit_space(d)
        for _ in range(50):
            p = random_point(space, rng)
            factors = factorize_displacement(space, space.basis, p)
            errors.append(tensor(factors).max_distance(displacement(space, p)))
        errors.append(tensor([single_qudit_fourier(d)] * n).max_distance(fourier(space)))
        single = multi_reference_state(space, space.basis)
        expected = reduce(np.kron, [single_reference(d).amps] * n)
        errors.append(distance(single.amps, expected))
        for _ in range(50):
            pieces = [random_state(qudit, rng) for _ in range(n)]
            joint = product_state(space, [piece.amps for piece in pieces])
            grids = [np.asarray(quasidist(piece.density(), 0).values) for piece in pieces]
            errors.append(distance(quasidist(joint.density(), 0).values, reduce(np.kron, grids)))
    return Outcome(max_abs(errors), 1e-10)


# ---------------------------------------------------------------- states


def _reference_errors(d: int) -> List[float]:
    psi = reference_state(d)
    space = psi.space
    errors = [distance(single_qudit_fourier(d).apply(psi.amps), psi.amps)]
    amps = psi.amps.real
    errors.append(0.0 if np.array_equal(amps[1:], amps[1:][::-1]) else 1.0)
    mean_u = psi.expectation(generator_U(space, space.ctx.one))
    mean_v = psi.expectation(generator_V(space, space.ctx.one))
    errors.append(abs(mean_u - mean_v))
    errors.append(distance(reference_state_theta(d).amps, psi.amps))
    params = ThetaParams.for_dimension(d)
    drift = distance(reference_state(d, ThetaParams(d, 2 * params.K)).amps, psi.amps)
    errors.append(0.0 if drift <= 1e-15 else drift)
    return errors


@register_check("reference_state", "states")
def check_reference_state(rng: np.random.Generator) -> Outcome:
    """Fourier invariance, c_l = c_-l bit for bit, <U> = <V>, theta form and truncation stability."""
    errors = [e for d in (3, 5, 7, 11) for e in _reference_errors(d)]
    return Outcome(max_abs(errors), 1e-10)


@register_check("reference_state_d31", "states", tier="extended")
def check_reference_state_31(rng: np.random.Generator) -> Outcome:
    return Outcome(max_abs(_reference_errors(31)), 1e-10)


@register_check("coherent_covariance", "states")
def check_coherent_covariance(rng: np.random.Generator) -> Outcome:
    """D(p1) |p2> equals |p1 + p2> up to a unit phase."""
    space = single_qudit_space(5)
    errors = []
    for p in all_points(space):
        for q in all_points(space):
            moved = coherent_state(space, q).evolve(displacement(space, p))
            errors.append(abs(1.0 - abs(moved.inner(coherent_state(space, p + q)))))
    return Outcome(max_abs(errors), 1e-12)


@register_check("coherent_uncertainty", "states")
def check_coherent_uncertainty(rng: np.random.Generator) -> Outcome:
    """Displacement leaves (Delta U)^2 (Delta V)^2 of the reference state unchanged."""
    space = single_qudit_space(7)
    base = uncertainty_product(reference_state(7))
    errors = [abs(uncertainty_product(coherent_state(space, random_point(space, rng))) - base) for _ in range(20)]
    return Outcome(max_abs(errors), 1e-12, f"ratio to pi^2/d^2 at d=7: {uncertainty_ratio(reference_state(7)):.4f}")


@register_check("uncertainty_d31", "states", tier="extended")
def check_uncertainty_31(rng: np.random.Generator) -> Outcome:
    space = single_qudit_space(31)
    ratios = [uncertainty_ratio(reference_state(31))]
    ratios += [uncertainty_ratio(coherent_state(space, random_point(space, rng))) for _ in range(20)]
    worst = max(abs(r - 1.0) for r in ratios)
    return Outcome(worst, 0.1, f"ratio {ratios[0]:.6f}")


@register_check("harper_asymptotics", "states", tier="extended")
def check_harper(rng: np.random.Generator) -> Outcome:
    gaps = [abs(harper_energy(d) - harper_asymptotic(d)) for d in (11, 17, 23, 31)]
    increases = sum(1 for a, b in zip(gaps, gaps[1:]) if b >= a)
    overlap = harper_overlap(31)
    error = float(increases) + max(0.0, 0.999 - overlap)
    return Outcome(error, EXACT, f"gaps {[f'{g:.3e}' for g in gaps]}, overlap {overlap:.6f}")


# ------------------------------------------------------------- quasidist


@register_check("kernel_covariance", "quasidist")
def check_kernel_covariance(rng: np.random.Generator) -> Outcome:
    space = single_qudit_space(5)
    errors = []
    origin = PhasePoint.origin(space.ctx)
    for s in (-1, 0, 1):
        base = kernel(space, s, origin).op
        for p in all_points(space):
            d = displacement(space, p)
            errors.append(kernel(space, s, p).op.max_distance(d @ base @ d.dagger()))
    return Outcome(max_abs(errors), 1e-10)


@register_check("kernel_trace_orthogonality", "quasidist")
def check_kernel_orthogonality(rng: np.random.Generator) -> Outcome:
    """Tr[w^(s)(p) w^(-s)(p')] = d^n delta(p, p')."""
    space = single_qudit_space(5)
    points = all_points(space)
    errors = {}
    for s in (-1, 0, 1):
        left = np.stack([kernel(space, s, p).op.matrix for p in points])
        right = np.stack([kernel(space, -s, p).op.matrix for p in points])
        gram = np.einsum("aij,bji->ab", left, right)
        errors[s] = distance(gram, space.dim * np.eye(len(points)))
    return Outcome.worst({"s=0": (errors[0], 1e-10), "s=+-1": (max(errors[1], errors[-1]), 1e-9)})


@register_check("kernel_hermiticity", "quasidist")
def check_kernel_hermiticity(rng: np.random.Generator) -> Outcome:
    """max|w - w^dag| of the raw operator sums, before any symmetrization."""
    errors = []
    cases = [(single_qudit_space(5), (-1, 0, 1)), (gf8_selfdual(), (-1, 0)), (gf27_selfdual(), (-1, 0))]
    for space, orders in cases:
        for s in orders:
            for _ in range(4):
                matrix = weyl_sum(space, kernel_coefficients(space, s, random_point(space, rng)))
                errors.append(hermiticity_error(matrix) / max(1.0, float(np.max(np.abs(matrix)))))
    return Outcome(max_abs(errors), 1e-12)


@register_check("reconstruction", "quasidist")
def check_reconstruction(rng: np.random.Generator) -> Outcome:
    space = single_qudit_space(5)
    errors: Dict[int, List[float]] = {-1: [], 0: [], 1: []}
    for s in (-1, 0, 1):
        for _ in range(20):
            rho = random_density(space, rng)
            errors[s].append(reconstruct(quasidist(rho, s)).max_distance(rho))
    return Outcome.worst({"s=0": (max_abs(errors[0]), 1e-10), "s=+-1": (max_abs(errors[1] + errors[-1]), 1e-9)})


@register_check("q_function_scale", "quasidist")
def check_q_function(rng: np.random.Generator) -> Outcome:
    errors = []
    for space in (single_qudit_space(5), gf27_selfdual()):
        rho = random_density(space, rng)
        errors.append(q_function(rho).max_distance(quasidist(rho, -1)))
    return Outcome(max_abs(errors), 1e-10)


@register_check("marginals_and_lines", "quasidist")
def check_marginals(rng: np.random.Generator) -> Outcome:
    errors = []
    for d in (3, 5, 7):
        space = single_qudit_space(d)
        rho = random_density(space, rng)
        grid = quasidist(rho, 0)
        f = fourier(space)
        errors.append(distance(marginal(grid, "vertical"), np.real(np.diag(rho.matrix))))
        errors.append(distance(marginal(grid, "horizontal"), np.real(np.diag((f.dagger() @ rho @ f).matrix))))

        reference = quasidist(reference_state(d).density(), 0)
        for alpha in nonzero_elements(space.ctx):
            for j in range(d):
                beta = space.element(j)
                errors.append(abs(line_sum(reference, alpha, beta) - line_sum(reference, *reflected_line(alpha, beta))))
            mirrored = line_family(reference, -alpha.inverse())
            errors.append(distance(np.sort_complex(line_family(reference, alpha)), np.sort_complex(mirrored)))
            squeezed = quasidist(squeezed_state(space, alpha).density(), 0)
            unsqueezed = quasidist(squeezed_state(space, alpha.inverse()).density(), 0)
            errors.append(abs(axis_sum(squeezed, "mu") - axis_sum(unsqueezed, "nu")))
    return Outcome(max_abs(errors), 1e-12)


def _q_reference_errors(d: int) -> Tuple[float, str]:
    grid = q_function(reference_state(d).density())
    space = grid.space
    values = np.real(grid.values)
    origin = space.index(space.ctx.zero)
    rotated = values[np.ix_(space.negation, np.arange(d))].T
    errors = [distance(values, rotated)]
    peak = np.unravel_index(int(np.argmax(values)), values.shape)
    errors.append(0.0 if peak == (origin, origin) else 1.0)
    errors.append(max(0.0, -float(values.min())))
    return max_abs(errors), f"Q(0,0) = {values[origin, origin]:.6g}"


@register_check("q_reference_grid", "quasidist")
def check_q_reference(rng: np.random.Generator) -> Outcome:
    """Q of the reference state: peak at the origin, nonnegative, Q(m, n) = Q(-n, m)."""
    error, detail = _q_reference_errors(7)
    return Outcome(error, 1e-12, detail)


@register_check("q_reference_grid_d31", "quasidist", tier="extended")
def check_q_reference_31(rng: np.random.Generator) -> Outcome:
    error, detail = _q_reference_errors(31)
    return Outcome(error, 1e-12, detail)


# --------------------------------------------------------------- squeeze


@register_check("squeezed_moments", "squeeze")
def check_squeezed_moments(rng: np.random.Generator) -> Outcome:
    """<U> = <V^(s^2)> on the squeezed vacuum of one qudit."""
    space = single_qudit_space(7)
    squeeze = space.ctx.scalar(2)
    state = squeezed_state(space, squeeze)
    mean_u = state.expectation(generator_U(space, space.ctx.one))
    mean_v = state.expectation(generator_V(space, squeeze * squeeze))
    return Outcome(abs(mean_u - mean_v), 1e-12, "d=7, s=2")


def _squeeze_targets() -> List[Tuple[QuditSpace, List[FieldElement]]]:
    spaces = [single_qudit_space(5), single_qudit_space(7), gf8_selfdual(), gf27_selfdual()]
    targets = []
    for space in spaces:
        elements = nonzero_elements(space.ctx)
        if space.dim == 27:
            elements = [space.ctx.power(k) for k in (1, 2, 7, 13)]
        targets.append((space, elements))
    return targets


@register_check("squeeze_geometry", "squeeze")
def check_squeeze_geometry(rng: np.random.Generator) -> Outcome:
    """Wigner grids of S rho S^dag against the transported grid of rho."""
    errors = []
    for space, elements in _squeeze_targets():
        ctx = space.ctx
        rho = random_density(space, rng)
        grid = quasidist(rho, 0)
        for squeeze in elements:
            s = squeeze_operator(space, squeeze)
            moved = quasidist(s @ rho @ s.dagger(), 0)
            errors.append(moved.max_distance(squeeze_grid(grid, squeeze)))
            if space.d == 2:
                continue
            shrink = space.index_of[ctx.mul_codes(ctx.inv_codes(squeeze.code), space.codes)]
            stretch = space.index_of[ctx.mul_codes(squeeze.code, space.codes)]
            errors.append(distance(moved.values, grid.values[np.ix_(shrink, stretch)]))
            pulled = quasidist(s.dagger() @ rho @ s, 0)
            errors.append(distance(pulled.values, grid.values[np.ix_(stretch, shrink)]))
    return Outcome(max_abs(errors), 1e-10)


@register_check("squeeze_coefficient_map", "squeeze")
def check_squeeze_coefficient_map(rng: np.random.Generator) -> Outcome:
    failures = 0
    for space in (gf8_selfdual(), gf27_selfdual()):
        for squeeze in nonzero_elements(space.ctx):
            moved = np.argmax(np.abs(squeeze_operator(space, squeeze).matrix), axis=0)
            for i, ell in enumerate(space.coordinates):
                mapped = squeeze_coefficient_map(squeeze, space.basis, tuple(int(v) for v in ell))
                failures += int(mapped != tuple(int(v) for v in space.coordinates[moved[i]]))
    return Outcome(float(failures), EXACT, "formula against the permutation matrix on every tuple")


def _pattern(space: QuditSpace, c: np.ndarray, rule: Sequence[Sequence[int]]) -> np.ndarray:
    coords = space.coordinates
    amps = np.ones(space.dim, dtype=np.complex128)
    for picks in rule:
        amps *= c[coords[:, list(picks)].sum(axis=1) % 2]
    return amps


@register_check("three_qubit_squeezing", "squeeze")
def check_three_qubit(rng: np.random.Generator) -> Outcome:
    """Coefficient patterns, permutation classes and entanglement onset on GF(8)."""
    space = gf8_selfdual()
    ctx = space.ctx
    errors: List[float] = []
    for _ in range(10):
        c = rng.normal(size=2) + 1j * rng.normal(size=2)
        c = c / np.linalg.norm(c)
        psi = product_state(space, [c, c, c])
        backward = psi.evolve(squeeze_operator(space, ctx.sigma).dagger())
        errors.append(distance(backward.amps, _pattern(space, c, [(0, 1), (0, 2), (1,)])))
        forward = psi.evolve(squeeze_operator(space, ctx.sigma))
        errors.append(distance(forward.amps, _pattern(space, c, [(0, 1, 2), (0, 2), (2,)])))
        for leader, followers in ((1, (2, 4)), (3, (5, 6))):
            lead = psi.evolve(squeeze_operator(space, ctx.power(leader)))
            for k in followers:
                other = psi.evolve(squeeze_operator(space, ctx.power(k)))
                errors.append(0.0 if equivalent_under_qudit_permutation(other, lead) is not None else 1.0)
        generic = product_state(space, [rng.normal(size=2) + 1j * rng.normal(size=2) for _ in range(3)])
        purity = reduced_purity(generic.evolve(squeeze_operator(space, ctx.sigma)), 0)
        errors.append(max(0.0, purity - (1.0 - 1e-6)))
    return Outcome(max_abs(errors), 1e-12)

