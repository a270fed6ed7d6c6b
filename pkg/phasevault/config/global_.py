"""Process-wide knobs: the RNG seed and the d^n size cap."""

from __future__ import annotations

import os
from typing import Type, Union

from pydantic import BaseModel, Field, field_validator

__all__ = ["DEFAULT_SIZE_CAP", "SIZE_CAP_ENV", "MaybeGlobal", "resolve_size_cap"]

DEFAULT_SIZE_CAP = 2**16
SIZE_CAP_ENV = "QPS_SIZE_CAP"


def resolve_size_cap(explicit: Union[int, None] = None) -> int:
    """Return ``explicit`` if given, else ``$QPS_SIZE_CAP``, else 2**16."""
    if explicit is not None:
        return int(explicit)
    raw = os.environ.get(SIZE_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_SIZE_CAP
    try:
        cap = int(raw)
    except ValueError as err:
        raise ValueError(f"{SIZE_CAP_ENV} must be an integer, got {raw!r}.") from err
    if cap < 2:
        raise ValueError(f"{SIZE_CAP_ENV} must be at least 2, got {cap}.")
    return cap


class MaybeGlobal(BaseModel):
    seed: int = Field(default=1992, description="Seed for randomized verification inputs.")
    size_cap: Union[int, None] = Field(default=None, description="Override for the d^n cap; None reads the env.")

    @field_validator("seed")
    @classmethod
    def seed_non_negative_and_within_32_bit_unsigned_integer(cls: Type[MaybeGlobal], v: int) -> int:
        if not (0 <= v <= 2**32 - 1):
            raise ValueError(f"Seed must be within 0 and {2 ** 32 - 1} inclusive.")
        return v

    @field_validator("size_cap")
    @classmethod
    def size_cap_at_least_two(cls: Type[MaybeGlobal], v: Union[int, None]) -> Union[int, None]:
        if v is not None and v < 2:
            raise ValueError(f"size_cap must be at least 2, got {v}.")
        return v

    @property
    def effective_size_cap(self) -> int:
        return resolve_size_cap(self.size_cap)
