"""Operator codecs: JSON and CSV of interleaved (re, im) entries, row-major.

Both formats round-trip bit-exactly: JSON writes floats with ``repr``
precision and CSV with 17 significant digits.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np

from phasevault._types._alias import ComplexMatrix
from phasevault.core.exceptions import SchemaError
from phasevault.io.schema import FileHeader, header_for, read_comment_header, space_from_header, validate_header
from phasevault.operators.base import Operator, OperatorTag
from phasevault.operators.space import QuditSpace

__all__ = [
    "write_operator_json",
    "read_operator_json",
    "write_operator_csv",
    "read_operator_csv",
    "interleave",
    "deinterleave",
]

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def interleave(matrix: ComplexMatrix) -> np.ndarray:
    """Rows ``re(A[i,0]), im(A[i,0]), re(A[i,1]), ...``."""
    rows, cols = matrix.shape
    out = np.empty((rows, 2 * cols), dtype=np.float64)
    out[:, 0::2] = matrix.real
    out[:, 1::2] = matrix.imag
    return out


def deinterleave(table: np.ndarray) -> ComplexMatrix:
    if table.ndim != 2 or table.shape[1] != 2 * table.shape[0]:
        raise SchemaError(f"Expected an N x 2N table of (re, im) pairs, got shape {table.shape}.")
    return table[:, 0::2] + 1j * table[:, 1::2]


def _resolve(op: Operator, space: Optional[QuditSpace]) -> QuditSpace:
    resolved = space if space is not None else op.space
    if resolved is None:
        raise ValueError("Operator carries no space; pass the labelling explicitly.")
    return resolved


def _tags(op: Operator) -> List[str]:
    return sorted(tag.value for tag in op.tags)


def write_operator_json(op: Operator, path: PathLike, space: Optional[QuditSpace] = None) -> Path:
    header = header_for(_resolve(op, space), "operator")
    payload: Dict[str, Any] = header.dump()
    payload.update(
        label=op.label,
        tags=_tags(op),
        shape=list(op.matrix.shape),
        entries=[[float(z.real), float(z.imag)] for z in op.matrix.reshape(-1)],
    )
    target = Path(path)
    target.write_text(json.dumps(payload, indent=2), encoding="utf-8")
    logger.debug("Wrote operator %s to %s", op.label, target)
    return target


def read_operator_json(path: PathLike) -> Operator:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise SchemaError(f"{path} is not valid JSON: {err}") from err
    header = validate_header(payload, "operator")
    space = space_from_header(header)
    entries = np.asarray(payload.get("entries", []), dtype=np.float64)
    if entries.shape != (space.dim * space.dim, 2):
        raise SchemaError(f"Operator payload has shape {entries.shape}; expected ({space.dim ** 2}, 2).")
    matrix = (entries[:, 0] + 1j * entries[:, 1]).reshape(space.dim, space.dim)
    tags = frozenset(OperatorTag(t) for t in payload.get("tags", []))
    return Operator(matrix, space, tags, payload.get("label", ""))


def write_operator_csv(op: Operator, path: PathLike, space: Optional[QuditSpace] = None) -> Path:
    header = header_for(_resolve(op, space), "operator")
    lines = [
        f"schema: {header.schema_}",
        f"kind: {header.kind}",
        f"d: {header.d}",
        f"n: {header.n}",
        f"poly: {header.poly}",
        f"basis: {' '.join(header.basis)}",
        f"ordering: {header.ordering}",
        f"label: {op.label}",
        f"tags: {' '.join(_tags(op))}",
    ]
    target = Path(path)
    np.savetxt(target, interleave(op.matrix), fmt="%.17g", delimiter=",", header="\n".join(lines), comments="# ")
    return target


def read_operator_csv(path: PathLike) -> Operator:
    target = Path(path)
    meta, _ = read_comment_header(target)
    try:
        header = FileHeader(
            schema=int(meta["schema"]),
            kind=meta["kind"],
            d=int(meta["d"]),
            n=int(meta["n"]),
            poly=meta["poly"],
            basis=meta["basis"].split(),
            ordering=meta.get("ordering", "lex"),
        )
    except (KeyError, ValueError) as err:
        raise SchemaError(f"{target} lacks a valid operator header: {err}") from err
    header = validate_header(header.dump(), "operator")
    space = space_from_header(header)
    table = np.loadtxt(target, delimiter=",", comments="#", ndmin=2)
    matrix = deinterleave(table)
    if matrix.shape != (space.dim, space.dim):
        raise SchemaError(f"Operator table is {matrix.shape}; expected {space.dim}x{space.dim}.")
    tags = frozenset(OperatorTag(t) for t in meta.get("tags", "").split())
    return Operator(matrix, space, tags, meta.get("label", ""))
