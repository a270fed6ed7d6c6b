from __future__ import annotations

from typing import List, Literal, Type, Union

from pydantic import BaseModel, Field, field_validator, model_validator

BasisSelector = Literal["selfdual", "polynomial", "normal", "custom"]
OrderingMode = Literal["lex", "dlog", "file"]


class FieldConfig(BaseModel):
    """Which GF(d^n) to build and how to label and display its elements.

    Primality of ``d`` is left to :func:`phasevault.field.make_field`, which
    raises the dedicated :class:`~phasevault.core.exceptions.NotPrime`.
    """

    d: int = Field(default=3, description="Characteristic (a prime).")
    n: int = Field(default=1, description="Number of qudits / extension degree.")
    poly: Union[str, None] = Field(default=None, description='Field polynomial, e.g. "x^3+2x^2+1".')
    basis: BasisSelector = Field(default="selfdual", description="Active basis for the Hilbert-space labelling.")
    custom_basis: Union[List[str], None] = Field(default=None, description='Element texts, e.g. ["s^1", "s^3"].')
    ordering: OrderingMode = Field(default="lex", description="Display order of grid axes.")
    ordering_file: Union[str, None] = Field(default=None, description="Label permutation for ordering=file.")

    @field_validator("d")
    @classmethod
    def d_at_least_two(cls: Type[FieldConfig], v: int) -> int:
        if v < 2:
            raise ValueError(f"d must be at least 2, got {v}.")
        return v

    @field_validator("n")
    @classmethod
    def n_positive(cls: Type[FieldConfig], v: int) -> int:
        if v < 1:
            raise ValueError(f"n must be positive, got {v}.")
        return v

    @model_validator(mode="after")
    def selectors_have_payload(self) -> FieldConfig:
        if self.basis == "custom" and not self.custom_basis:
            raise ValueError("basis=custom requires custom_basis.")
        if self.ordering == "file" and not self.ordering_file:
            raise ValueError("ordering=file requires ordering_file.")
        return self
