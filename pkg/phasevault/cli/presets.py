"""Named grid jobs for the figures: one command from config to exported data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Optional

from phasevault.config.tolerance import DEFAULT_TOLERANCES, ToleranceConfig
from phasevault.field.basis import Basis, parse_element
from phasevault.field.core import make_field
from phasevault.operators.space import QuditSpace
from phasevault.quasidist.grid import QuasiDistGrid, SOrder
from phasevault.quasidist.kernel import quasidist
from phasevault.states.coherent import squeezed_state
from phasevault.states.reference import multi_reference_state, reference_state
from phasevault.states.vector import StateVector

FIG2_POLY = "x^3+2x^2+1"
FIG2_BASIS = ("s^1", "s^3", "s^9")
FIG3_SQUEEZE = "s^7"


@dataclass(frozen=True)
class GridJob:
    state: StateVector
    s: SOrder
    ordering: str = "lex"
    ordering_file: Optional[str] = None

    @property
    def space(self) -> QuditSpace:
        return self.state.space

    def evaluate(self, tolerances: ToleranceConfig = DEFAULT_TOLERANCES) -> QuasiDistGrid:
        return quasidist(self.state.density(), self.s, space=self.space, tolerances=tolerances)


PresetFn = Callable[[], GridJob]
PRESET_REGISTRY: Dict[str, PresetFn] = {}


def register_preset(name: str) -> Callable[[PresetFn], PresetFn]:
    """
    Decorator factory for registering grid presets.

    Parameters
    ----------
    name : str
        Name accepted by ``phasevault grid --preset``.

    Returns
    -------
    Callable[[PresetFn], PresetFn]
        A decorator that registers the preset builder.
    """

    def register_preset_fn(fn: PresetFn) -> PresetFn:
        if name in PRESET_REGISTRY:
            raise ValueError(f"Cannot register duplicate preset {name}")
        PRESET_REGISTRY[name] = fn
        return fn

    return register_preset_fn


def three_qutrit_space() -> QuditSpace:
    ctx = make_field(3, 3, FIG2_POLY)
    return QuditSpace(ctx, Basis.custom(ctx, list(FIG2_BASIS)))


@register_preset("fig1")
def fig1() -> GridJob:
    """Q function of the single-qudit reference state at d = 31."""
    return GridJob(state=reference_state(31), s=SOrder.Q)


@register_preset("fig2")
def fig2() -> GridJob:
    """Q function of the three-qutrit reference state, axes in the packaged order."""
    space = three_qutrit_space()
    return GridJob(state=multi_reference_state(space, space.basis), s=SOrder.Q, ordering="file", ordering_file="fig2")


@register_preset("fig3")
def fig3() -> GridJob:
    """Wigner function of the three-qutrit squeezed vacuum with squeeze s^7."""
    space = three_qutrit_space()
    fiducial = multi_reference_state(space, space.basis)
    squeeze = parse_element(FIG3_SQUEEZE, space.ctx)
    state = squeezed_state(space, squeeze, fiducial=fiducial)
    return GridJob(state=state, s=SOrder.WIGNER, ordering="file", ordering_file="fig2")


def build_preset(name: str) -> GridJob:
    if name not in PRESET_REGISTRY:
        raise ValueError(f"Unknown preset {name!r}; available: {sorted(PRESET_REGISTRY)}.")
    return PRESET_REGISTRY[name]()
