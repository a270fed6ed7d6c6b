from phasevault.cli.main import build_parser, main
from phasevault.cli.presets import PRESET_REGISTRY, GridJob, build_preset, register_preset

__all__ = ["PRESET_REGISTRY", "GridJob", "build_parser", "build_preset", "main", "register_preset"]
