from phasevault.config.composer import Composer
from phasevault.config.field import FieldConfig
from phasevault.config.global_ import MaybeGlobal, resolve_size_cap
from phasevault.config.logger import LoggerConfig
from phasevault.config.run import RunConfig
from phasevault.config.tolerance import DEFAULT_TOLERANCES, ToleranceConfig

__all__ = [
    "Composer",
    "FieldConfig",
    "MaybeGlobal",
    "resolve_size_cap",
    "LoggerConfig",
    "RunConfig",
    "ToleranceConfig",
    "DEFAULT_TOLERANCES",
]
