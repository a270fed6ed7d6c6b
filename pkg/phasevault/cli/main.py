"""``phasevault`` command line.

Configuration is layered: the packaged ``config.yaml``, then an optional
``--config`` YAML, then the flags below, then any trailing ``key=value``
dotlist overrides (``run.tolerance.grid=1e-9``). The merged tree is
validated by :class:`~phasevault.config.composer.Composer`.

Exit codes: 0 success, 1 failed verification, 2 invalid input.
"""

from __future__ import annotations

import argparse
import logging
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

import numpy as np
import pandas as pd
from omegaconf import OmegaConf as om
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from phasevault.cli.presets import build_preset
from phasevault.config.composer import Composer
from phasevault.config.field import FieldConfig
from phasevault.config.run import RunConfig
from phasevault.core.exceptions import PhaseVaultError
from phasevault.core.logger import RichLogger
from phasevault.field.basis import Basis, BasisKind, find_selfdual_basis, parse_element
from phasevault.field.core import FieldContext, make_field
from phasevault.io.grid_io import write_grid_csv, write_grid_json
from phasevault.io.state_io import read_state_json, write_state_json
from phasevault.operators.base import Operator, OperatorTag
from phasevault.operators.pauli import displacement
from phasevault.operators.space import PhasePoint, QuditSpace
from phasevault.operators.squeeze import squeeze_operator
from phasevault.quasidist.grid import QuasiDistGrid
from phasevault.quasidist.kernel import quasidist
from phasevault.states.coherent import default_fiducial
from phasevault.states.vector import StateVector
from phasevault.utils.config_management.omegaconf import load_yaml_config, merge_configs, to_dotlist, to_plain_dict
from phasevault.utils.reproducibility.seed import seed_all
from phasevault.verification.runner import run_suite

__all__ = ["main", "build_parser", "load_composer", "build_space", "select_state"]

logger = logging.getLogger("phasevault.cli")

CONSOLE = Console()
DEFAULT_REPORT = "verify_report.json"


def packaged_config_path() -> Path:
    return Path(str(resources.files("phasevault.cli").joinpath("config.yaml")))


def _field_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("field")
    group.add_argument("--d", type=int, help="Characteristic (a prime).")
    group.add_argument("--n", type=int, help="Number of qudits.")
    group.add_argument("--poly", type=str, help='Field polynomial, e.g. "x^3+2x^2+1".')
    group.add_argument("--basis", choices=["selfdual", "polynomial", "normal", "custom"])
    group.add_argument("--custom-basis", nargs="+", metavar="ELEMENT", help="Element texts, e.g. s^1 s^3 s^9.")
    group.add_argument("--ordering", choices=["lex", "dlog", "file"])
    group.add_argument("--ordering-file", type=str, help="Label permutation file, or the packaged name fig2.")
    return parent


def _state_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--point", nargs=2, metavar=("MU", "NU"), help="Displace by D(mu, nu).")
    parent.add_argument("--squeeze", type=str, help="Squeeze element, e.g. s^7.")
    parent.add_argument(
        "--squeeze-adjoint", action="store_const", const=True, help="Apply S^dag instead of S for --squeeze."
    )
    parent.add_argument("--state", type=str, help="reference | mixed | path to a state JSON file.")
    parent.add_argument("--output", type=str, help="Output file.")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="phasevault", description="Discrete phase space of n qudits over GF(d^n).")
    parser.add_argument("--config", type=str, help="YAML merged over the packaged defaults.")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--seed", type=int, help="Seed for randomized inputs.")
    commands = parser.add_subparsers(dest="command", required=True)

    field_flags, state_flags = _field_flags(), _state_flags()
    commands.add_parser("field", parents=[field_flags], help="Summarize GF(d^n) and its bases.")
    commands.add_parser("state", parents=[field_flags, state_flags], help="Build and export a state.")
    grid = commands.add_parser("grid", parents=[field_flags, state_flags], help="Export a quasidistribution grid.")
    grid.add_argument("--s", type=int, choices=[-1, 0, 1], help="+1 P, 0 Wigner, -1 Q.")
    grid.add_argument("--preset", type=str, help="fig1 | fig2 | fig3.")
    grid.add_argument("--format", dest="output_format", choices=["json", "csv"])
    verify = commands.add_parser("verify", help="Run the invariant suite.")
    verify.add_argument("--dims", nargs="*", type=int, help="Extra dimensions, e.g. 31.")
    verify.add_argument("--output", type=str, help=f"Report path (default {DEFAULT_REPORT}).")
    return parser


def flag_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """Nested overrides from the parsed flags; unset flags are ``None`` and dropped by ``to_dotlist``."""
    get = lambda name: getattr(args, name, None)  # noqa: E731
    field = {
        "d": get("d"),
        "n": get("n"),
        "poly": get("poly"),
        "basis": get("basis"),
        "custom_basis": get("custom_basis"),
        "ordering": get("ordering"),
        "ordering_file": get("ordering_file"),
    }
    run = {
        "field": field,
        "s": get("s"),
        "point": get("point"),
        "squeeze": get("squeeze"),
        "squeeze_adjoint": get("squeeze_adjoint"),
        "state": get("state"),
        "preset": get("preset"),
        "output_format": get("output_format"),
        "output": get("output"),
        "dims": get("dims"),
    }
    overrides: Dict[str, Any] = {"run": run, "global_": {"seed": get("seed")}}
    if get("log_level") is not None:
        overrides["logger"] = {"rich_handler_config": {"level": get("log_level")}}
    return overrides


def load_composer(args: argparse.Namespace, dotlist: Sequence[str] = ()) -> Composer:
    cfg = load_yaml_config(str(packaged_config_path()))
    if getattr(args, "config", None):
        cfg = om.merge(cfg, load_yaml_config(args.config))
    cfg = merge_configs(cfg, to_dotlist(flag_overrides(args)) + list(dotlist))
    return Composer(**to_plain_dict(cfg))


def build_space(cfg: FieldConfig, size_cap: Optional[int] = None) -> QuditSpace:
    ctx = make_field(cfg.d, cfg.n, cfg.poly, size_cap=size_cap)
    if cfg.basis == "polynomial":
        return QuditSpace(ctx, Basis.polynomial(ctx))
    if cfg.basis == "normal":
        return QuditSpace(ctx, Basis.normal(ctx))
    if cfg.basis == "custom":
        assert cfg.custom_basis is not None
        return QuditSpace(ctx, Basis.custom(ctx, [parse_element(t, ctx) for t in cfg.custom_basis]))
    return QuditSpace.default(ctx)


def select_state(run: RunConfig, space: QuditSpace) -> Union[StateVector, Operator]:
    """The configured state with ``squeeze`` applied first, then ``point``.

    ``mixed`` is the maximally mixed density operator; a file path is read
    with its own labelling and its norm rechecked. ``squeeze_adjoint``
    swaps S for S^dag.
    """
    if run.state == "mixed":
        matrix = np.eye(space.dim, dtype=np.complex128) / space.dim
        return Operator(matrix, space, frozenset({OperatorTag.HERMITIAN}), "mixed", run.tolerance)
    if run.state == "reference":
        fiducial = default_fiducial(space)
        state = StateVector(fiducial.amps, space, fiducial.label, run.tolerance)
    else:
        state = read_state_json(run.state, run.tolerance)
        space = state.space
    if run.squeeze is not None:
        squeeze = squeeze_operator(space, parse_element(run.squeeze, space.ctx, space.basis))
        state = state.evolve(squeeze.dagger() if run.squeeze_adjoint else squeeze)
    if run.point is not None:
        mu, nu = (parse_element(text, space.ctx, space.basis) for text in run.point)
        state = state.evolve(displacement(space, PhasePoint(mu, nu)))
    return state


def _render_relation(ctx: FieldContext) -> str:
    """sigma^n written in lower powers of sigma, highest first."""
    coeffs = ctx.power(ctx.n).coeffs
    terms = []
    for i in reversed(range(ctx.n)):
        c = coeffs[i]
        if c == 0:
            continue
        power = "1" if i == 0 else ("s" if i == 1 else f"s^{i}")
        terms.append(power if c == 1 and i > 0 else (f"{c}" if i == 0 else f"{c}{power}"))
    return f"s^{ctx.n} = " + (" + ".join(terms) if terms else "0")


def cmd_field(composer: Composer) -> int:
    space = build_space(composer.run.field, composer.global_.effective_size_cap)
    ctx = space.ctx
    special = find_selfdual_basis(ctx)
    if special.kind is BasisKind.SELFDUAL:
        verdict = "selfdual {" + ", ".join(special.labels) + "}"
    else:
        verdict = "no selfdual basis; almost-selfdual {" + ", ".join(special.labels) + "}"

    table = Table(title=f"GF({ctx.d}^{ctx.n})", show_header=False)
    table.add_row("polynomial", str(ctx.poly))
    table.add_row("sigma", f"{ctx.sigma.label} = {ctx.sigma.coeffs}")
    table.add_row("relation", _render_relation(ctx))
    table.add_row("special basis", verdict)
    table.add_row("labelling", "{" + ", ".join(space.basis.labels) + "}")
    CONSOLE.print(table)
    gram = pd.DataFrame(special.gram, index=special.labels, columns=special.labels)
    CONSOLE.print(f"Gram matrix tr(theta_i theta_j):\n{gram.to_string()}")
    logger.info("%s; %s", _render_relation(ctx), verdict)
    return 0


def cmd_state(composer: Composer) -> int:
    run = composer.run
    space = build_space(run.field, composer.global_.effective_size_cap)
    state = select_state(run, space)
    if not isinstance(state, StateVector):
        raise ValueError("state=mixed is not a pure state; use it with the grid command.")
    if run.output is not None:
        path = write_state_json(state, run.output)
        logger.info("Wrote %s to %s", state.label, path)
    norm = float(np.linalg.norm(state.amps))
    CONSOLE.print(f"{state.label}: dim {state.dim}, norm {norm:.15f}")
    return 0


def _write_grid(grid: QuasiDistGrid, run: RunConfig, ordering: str, ordering_file: Optional[str]) -> None:
    if run.output is None:
        return
    writer = write_grid_csv if run.output_format == "csv" else write_grid_json
    path = writer(grid, run.output, ordering, ordering_file)
    logger.info("Wrote %dx%d grid (s=%d) to %s", grid.space.dim, grid.space.dim, int(grid.s), path)


def cmd_grid(composer: Composer) -> int:
    run = composer.run
    if run.preset is not None:
        job = build_preset(run.preset)
        grid = job.evaluate(run.tolerance)
        _write_grid(grid, run, job.ordering, job.ordering_file)
    else:
        space = build_space(run.field, composer.global_.effective_size_cap)
        state = select_state(run, space)
        rho = state if isinstance(state, Operator) else state.density()
        grid = quasidist(rho, run.s, space=rho.space, tolerances=run.tolerance)
        _write_grid(grid, run, run.field.ordering, run.field.ordering_file)
    values = np.real(grid.values)
    CONSOLE.print(
        f"s={int(grid.s)} grid {grid.space.dim}x{grid.space.dim}: "
        f"total {grid.total.real:.12g}, min {values.min():.6g}, max {values.max():.6g}"
    )
    return 0


def _report_table(frame: pd.DataFrame) -> Table:
    table = Table(title="phasevault verify")
    for column in ("name", "group", "passed", "max_error", "seconds"):
        table.add_column(column)
    for row in frame.itertuples(index=False):
        status = "[green]PASS[/]" if row.passed else "[red]FAIL[/]"
        table.add_row(row.name, row.group, status, f"{row.max_error:.2e}", f"{row.seconds:.2f}")
    return table


def cmd_verify(composer: Composer) -> int:
    run = composer.run
    seed = seed_all(composer.global_.seed)
    report = run_suite(run.dims, seed=seed)
    CONSOLE.print(_report_table(report.to_frame()))
    path = report.write(run.output or DEFAULT_REPORT)
    logger.info("Report written to %s", path)
    if not report.passed:
        logger.error("Failing checks: %s", ", ".join(report.failures))
        return 1
    return 0


COMMANDS: Dict[str, Callable[[Composer], int]] = {
    "field": cmd_field,
    "state": cmd_state,
    "grid": cmd_grid,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args, extras = parser.parse_known_args(argv)
    stray = [item for item in extras if item.startswith("-") or "=" not in item]
    if stray:
        parser.error(f"unrecognized arguments: {' '.join(stray)}")

    logging.captureWarnings(True)
    try:
        composer = load_composer(args, extras)
        RichLogger(**composer.logger.model_dump())
        logger.debug("Resolved configuration:\n%s", composer.pretty_text())
        return COMMANDS[args.command](composer)
    except (PhaseVaultError, ValidationError, ValueError, FileNotFoundError) as err:
        CONSOLE.print(f"[bold red]{type(err).__name__}[/]: {err}")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
