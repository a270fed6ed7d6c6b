from __future__ import annotations

import pytest

from phasevault.cli.presets import PRESET_REGISTRY, GridJob, build_preset, register_preset
from phasevault.quasidist.grid import SOrder


def test_registry_holds_the_figures() -> None:
    assert set(PRESET_REGISTRY) >= {"fig1", "fig2", "fig3"}


def test_duplicate_presets_are_refused() -> None:
    with pytest.raises(ValueError):
        register_preset("fig2")(lambda: build_preset("fig2"))


def test_fig3_is_a_squeezed_wigner_job() -> None:
    job = build_preset("fig3")
    assert isinstance(job, GridJob)
    assert job.s is SOrder.WIGNER
    assert job.space.basis.labels == ["s^1", "s^3", "s^9"]
    assert job.ordering_file == "fig2"
    assert job.state.label.startswith("squeezed(s^7)")


def test_unknown_preset() -> None:
    with pytest.raises(ValueError):
        build_preset("fig9")
