from __future__ import annotations

import pytest
from pydantic import ValidationError

from phasevault.config.composer import Composer
from phasevault.config.field import FieldConfig
from phasevault.config.global_ import DEFAULT_SIZE_CAP, MaybeGlobal, resolve_size_cap
from phasevault.config.run import RunConfig
from phasevault.config.tolerance import ToleranceConfig


def test_run_config_text_round_trip() -> None:
    config = RunConfig(
        field=FieldConfig(d=3, n=3, poly="x^3+2x^2+1", basis="custom", custom_basis=["s^1", "s^3", "s^9"]),
        s=-1,
        point=["s^1", "s^2"],
        squeeze="s^7",
        squeeze_adjoint=True,
        dims=[31],
    )
    assert RunConfig.from_text(config.to_text()) == config


@pytest.mark.parametrize(
    "kwargs",
    [
        {"s": 2},
        {"point": ["s^1"]},
        {"output_format": "xlsx"},
        {"field": {"d": 1}},
        {"field": {"n": 0}},
        {"field": {"basis": "custom"}},
        {"field": {"ordering": "file"}},
        {"tolerance": {"norm": 0.0}},
    ],
)
def test_run_config_rejects(kwargs: dict) -> None:
    with pytest.raises(ValidationError):
        RunConfig(**kwargs)


def test_seed_range() -> None:
    with pytest.raises(ValidationError):
        MaybeGlobal(seed=-1)
    with pytest.raises(ValidationError):
        MaybeGlobal(size_cap=1)


def test_size_cap_resolution(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("QPS_SIZE_CAP", raising=False)
    assert resolve_size_cap() == DEFAULT_SIZE_CAP
    monkeypatch.setenv("QPS_SIZE_CAP", "729")
    assert resolve_size_cap() == 729
    assert MaybeGlobal(size_cap=27).effective_size_cap == 27
    monkeypatch.setenv("QPS_SIZE_CAP", "lots")
    with pytest.raises(ValueError):
        resolve_size_cap()


def test_composer_defaults() -> None:
    composer = Composer()
    assert composer.global_.seed == 1992
    assert composer.run.field.basis == "selfdual"
    assert composer.run.tolerance == ToleranceConfig()
    assert composer.logger.module_name == "phasevault"


def test_composer_renders_for_debug_logs() -> None:
    text = Composer().pretty_text()
    assert "RunConfig" in text
    assert "squeeze_adjoint=False" in text
