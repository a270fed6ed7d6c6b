from __future__ import annotations

from pydantic import BaseModel, Field
from rich.pretty import pretty_repr

from phasevault.config.global_ import MaybeGlobal
from phasevault.config.logger import LoggerConfig
from phasevault.config.run import RunConfig


class Composer(BaseModel):
    logger: LoggerConfig = Field(default_factory=LoggerConfig)
    global_: MaybeGlobal = Field(default_factory=MaybeGlobal)
    run: RunConfig = Field(default_factory=RunConfig)

    class Config:
        """Pydantic config."""

        arbitrary_types_allowed = True

    def pretty_text(self) -> str:
        """The resolved tree as rich renders it, for debug logs."""
        return pretty_repr(self)
