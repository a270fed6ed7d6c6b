from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Type, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from phasevault._types._sentinel import MISSING

LOG_LEVELS = frozenset({"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"})


def _default_handler_config() -> Dict[str, Any]:
    return {
        "level": "INFO",
        "console": MISSING,
        "show_level": True,
        "show_path": False,
        "show_time": True,
        "rich_tracebacks": True,
        "markup": True,
        "log_time_format": "[%Y-%m-%d %H:%M:%S]",
    }


class LoggerConfig(BaseModel):
    """Keyword arguments of :class:`phasevault.core.logger.RichLogger`, validated."""

    log_file: Union[str, None] = Field(default=None, description="Session log file name.")
    module_name: Union[str, None] = Field(default="phasevault", description="Logger name; None is the root logger.")
    propagate: bool = Field(default=False, description="Forward records to ancestor loggers.")
    log_root_dir: Union[str, None] = Field(default=None, description="Parent of the timestamped session folders.")
    rich_handler_config: Dict[str, Any] = Field(
        default_factory=_default_handler_config, description="Keyword arguments of the console RichHandler."
    )

    @field_validator("log_root_dir")
    @classmethod
    def check_log_root_dir(cls: Type[LoggerConfig], v: Union[str, None]) -> Union[str, None]:
        if v is not None:
            Path(v).mkdir(parents=True, exist_ok=True)
        return v

    @field_validator("rich_handler_config")
    @classmethod
    def level_is_known(cls: Type[LoggerConfig], v: Dict[str, Any]) -> Dict[str, Any]:
        level = str(v.get("level", "INFO")).upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"Unknown log level {level!r}; expected one of {sorted(LOG_LEVELS)}.")
        return {**v, "level": level}

    @model_validator(mode="after")
    def file_needs_root(self) -> LoggerConfig:
        if (self.log_file is None) != (self.log_root_dir is None):
            raise ValueError("log_file and log_root_dir go together; set both or neither.")
        return self
