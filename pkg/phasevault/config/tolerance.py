from __future__ import annotations

from pydantic import BaseModel, Field, field_validator

__all__ = ["ToleranceConfig", "DEFAULT_TOLERANCES"]


class ToleranceConfig(BaseModel):
    """Numerical thresholds, all in max-norm."""

    unitary: float = Field(default=1e-10, description="max|A^dag A - I| for operators flagged unitary.")
    hermitian: float = Field(default=1e-12, description="max|A - A^dag| for operators flagged hermitian.")
    norm: float = Field(default=1e-12, description="| ||psi|| - 1 | accepted for a StateVector.")
    singular: float = Field(default=1e-12, description="Smallest fiducial overlap admitted in the s=+1 kernel.")
    grid: float = Field(default=1e-10, description="Imaginary part tolerated when storing a grid as real.")

    @field_validator("unitary", "hermitian", "norm", "singular", "grid")
    @classmethod
    def strictly_positive(cls, v: float) -> float:
        if not v > 0:
            raise ValueError(f"Tolerances must be positive, got {v}.")
        return v


DEFAULT_TOLERANCES = ToleranceConfig()
