"""Versioned file headers shared by every codec.

A header pins down the field (d, n, polynomial), the Hilbert-space
labelling basis and the axis ordering, so an imported file is rebuilt on
exactly the labelling it was written from.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Literal, Mapping, Tuple, Type

import numpy as np
from pydantic import BaseModel, Field, ValidationError, field_validator

from phasevault._types._alias import IntArray
from phasevault.core.exceptions import SchemaError
from phasevault.field.basis import Basis, parse_element
from phasevault.field.core import make_field
from phasevault.operators.space import QuditSpace

__all__ = [
    "SCHEMA_VERSION",
    "CONVENTIONS",
    "FileHeader",
    "header_for",
    "labels_to_indices",
    "read_comment_header",
    "space_from_header",
    "validate_header",
]

SCHEMA_VERSION = 1

CONVENTIONS: Dict[str, str] = {
    "index": "sum_j l_j d^(n-1-j), first coordinate leftmost",
    "displacement": "phi(mu,nu) U_nu V_mu; odd d chi(mu nu/2), d=2 prod_j i^(m_j n_j)",
    "squeeze": "S = sum |l><s l|",
    "kernel": "d^-n sum chi(mu l - nu k) D(k,l) <D(k,l)>^-s",
}


class FileHeader(BaseModel):
    schema_: Literal[1] = Field(default=1, alias="schema")
    kind: Literal["operator", "state", "grid"]
    d: int
    n: int
    poly: str
    basis: List[str] = Field(description="Labelling basis, element labels s^k.")
    ordering: str = Field(default="lex", description="Axis ordering of the payload.")
    conventions: Dict[str, str] = Field(default_factory=lambda: dict(CONVENTIONS))

    model_config = {"populate_by_name": True}

    @field_validator("d", "n")
    @classmethod
    def positive(cls: Type[FileHeader], v: int) -> int:
        if v < 1:
            raise ValueError(f"Header sizes must be positive, got {v}.")
        return v

    def dump(self) -> Dict[str, Any]:
        return self.model_dump(by_alias=True)


def header_for(space: QuditSpace, kind: str, ordering: str = "lex") -> FileHeader:
    return FileHeader(
        schema=SCHEMA_VERSION,
        kind=kind,
        d=space.d,
        n=space.n,
        poly=str(space.ctx.poly),
        basis=list(space.basis.labels),
        ordering=ordering,
    )


def validate_header(payload: Mapping[str, Any], kind: str) -> FileHeader:
    if payload.get("schema") != SCHEMA_VERSION:
        raise SchemaError(f"Unsupported schema {payload.get('schema')!r}; expected {SCHEMA_VERSION}.")
    try:
        header = FileHeader.model_validate(dict(payload))
    except ValidationError as err:
        raise SchemaError(f"Malformed {kind} header: {err}") from err
    if header.kind != kind:
        raise SchemaError(f"Expected a {kind} file, got {header.kind}.")
    return header


def space_from_header(header: FileHeader) -> QuditSpace:
    ctx = make_field(header.d, header.n, header.poly)
    basis = Basis.custom(ctx, [parse_element(label, ctx) for label in header.basis])
    return QuditSpace(ctx, basis)


def labels_to_indices(space: QuditSpace, labels: List[str]) -> IntArray:
    """Space indices of element labels written along a grid axis."""
    codes = np.array([parse_element(label, space.ctx, space.basis).code for label in labels], dtype=np.int64)
    if sorted(codes.tolist()) != list(range(space.dim)):
        raise SchemaError("Axis labels do not enumerate the field exactly once.")
    return space.index_of[codes]


def read_comment_header(path: Path) -> Tuple[Dict[str, str], int]:
    """``# key: value`` lines at the top of a CSV file, and how many there are."""
    meta: Dict[str, str] = {}
    count = 0
    with path.open(encoding="utf-8") as handle:
        for line in handle:
            if not line.startswith("#"):
                break
            count += 1
            key, _, value = line[1:].strip().partition(":")
            meta[key.strip()] = value.strip()
    return meta, count
