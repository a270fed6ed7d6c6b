from __future__ import annotations

from typing import Any, Dict, List, Literal, Type, Union

from omegaconf import OmegaConf as om
from pydantic import BaseModel, Field, field_validator

from phasevault.config.field import FieldConfig
from phasevault.config.tolerance import ToleranceConfig

OutputFormat = Literal["csv", "json"]


class RunConfig(BaseModel):
    """Everything a single CLI command needs, after YAML and flags are merged."""

    field: FieldConfig = Field(default_factory=FieldConfig)
    tolerance: ToleranceConfig = Field(default_factory=ToleranceConfig)
    s: int = Field(default=0, description="Ordering parameter: +1 (P), 0 (Wigner), -1 (Q).")
    point: Union[List[str], None] = Field(default=None, description="Phase point as [mu, nu] element texts.")
    squeeze: Union[str, None] = Field(default=None, description="Squeeze element text, e.g. s^7.")
    squeeze_adjoint: bool = Field(default=False, description="Evolve with S^dag instead of S.")
    state: str = Field(default="reference", description="reference | mixed | path to a state JSON.")
    preset: Union[str, None] = Field(default=None, description="Named grid preset (fig1, fig2, fig3).")
    output_format: OutputFormat = Field(default="json")
    output: Union[str, None] = Field(default=None, description="Output path; None prints a summary only.")
    dims: List[int] = Field(default_factory=list, description="Extra verification dimensions, e.g. [31].")

    @field_validator("s")
    @classmethod
    def s_is_discrete(cls: Type[RunConfig], v: int) -> int:
        if v not in (-1, 0, 1):
            raise ValueError(f"s takes only the values -1, 0, +1; got {v}.")
        return v

    @field_validator("point")
    @classmethod
    def point_is_pair(cls: Type[RunConfig], v: Union[List[str], None]) -> Union[List[str], None]:
        if v is not None and len(v) != 2:
            raise ValueError(f"point needs exactly two elements (mu, nu), got {v}.")
        return v

    def to_text(self) -> str:
        return om.to_yaml(om.create(self.model_dump(mode="json")))

    @classmethod
    def from_text(cls: Type[RunConfig], text: str) -> RunConfig:
        container: Dict[str, Any] = om.to_container(om.create(text), resolve=True)  # type: ignore[assignment]
        return cls(**container)
