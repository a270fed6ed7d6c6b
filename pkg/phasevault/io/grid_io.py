"""Grid codecs.

Rows are mu and columns nu, both in the declared display ordering, with
element labels (``0``, ``s^k``) along each axis. CSV holds real grids only.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from phasevault._types._alias import IntArray
from phasevault.core.exceptions import SchemaError
from phasevault.field.ordering import element_ordering
from phasevault.io.schema import (
    FileHeader,
    header_for,
    labels_to_indices,
    read_comment_header,
    space_from_header,
    validate_header,
)
from phasevault.operators.space import QuditSpace
from phasevault.quasidist.grid import Normalization, QuasiDistGrid, SOrder

__all__ = ["display_order", "write_grid_json", "read_grid_json", "write_grid_csv", "read_grid_csv"]

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

AXIS_NAME = "mu/nu"


def display_order(
    space: QuditSpace, ordering: str = "lex", ordering_file: Optional[PathLike] = None
) -> Tuple[IntArray, List[str]]:
    """Space indices and labels of the elements in display order."""
    codes = element_ordering(space.ctx, space.basis, ordering, ordering_file)
    labels = [space.ctx.element(int(c)).label for c in codes]
    return space.index_of[codes], labels


def _reorder(values: np.ndarray, order: IntArray) -> np.ndarray:
    return values[np.ix_(order, order)]


def write_grid_json(
    grid: QuasiDistGrid,
    path: PathLike,
    ordering: str = "lex",
    ordering_file: Optional[PathLike] = None,
) -> Path:
    order, labels = display_order(grid.space, ordering, ordering_file)
    shown = _reorder(np.asarray(grid.values), order)
    payload: Dict[str, Any] = header_for(grid.space, "grid", ordering).dump()
    payload.update(
        s=int(grid.s),
        normalization=grid.normalization.value,
        labels=labels,
        values=np.real(shown).tolist(),
    )
    if not grid.is_real:
        payload["imag"] = np.imag(shown).tolist()
    target = Path(path)
    target.write_text(json.dumps(payload, indent=2), encoding="utf-8")
    logger.debug("Wrote %dx%d grid to %s", grid.space.dim, grid.space.dim, target)
    return target


def _restore(space: QuditSpace, labels: List[str], shown: np.ndarray) -> np.ndarray:
    if shown.shape != (space.dim, space.dim):
        raise SchemaError(f"Grid payload is {shown.shape}; expected {space.dim}x{space.dim}.")
    order = labels_to_indices(space, labels)
    values = np.empty_like(shown)
    values[np.ix_(order, order)] = shown
    return values


def read_grid_json(path: PathLike) -> QuasiDistGrid:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise SchemaError(f"{path} is not valid JSON: {err}") from err
    header = validate_header(payload, "grid")
    space = space_from_header(header)
    try:
        shown = np.asarray(payload["values"], dtype=np.float64)
        if "imag" in payload:
            shown = shown + 1j * np.asarray(payload["imag"], dtype=np.float64)
        order = SOrder(int(payload["s"]))
        normalization = Normalization(payload.get("normalization", "raw"))
        labels = list(payload["labels"])
    except (KeyError, ValueError) as err:
        raise SchemaError(f"Malformed grid payload in {path}: {err}") from err
    return QuasiDistGrid(_restore(space, labels, shown), order, space, normalization)


def write_grid_csv(
    grid: QuasiDistGrid,
    path: PathLike,
    ordering: str = "lex",
    ordering_file: Optional[PathLike] = None,
) -> Path:
    if not grid.is_real:
        raise ValueError("CSV export holds real grids only; use JSON for complex values.")
    order, labels = display_order(grid.space, ordering, ordering_file)
    header = header_for(grid.space, "grid", ordering)
    frame = pd.DataFrame(_reorder(np.asarray(grid.values), order), index=labels, columns=labels)
    frame.index.name = AXIS_NAME
    meta = {
        "schema": header.schema_,
        "kind": header.kind,
        "d": header.d,
        "n": header.n,
        "poly": header.poly,
        "basis": " ".join(header.basis),
        "ordering": ordering,
        "s": int(grid.s),
        "normalization": grid.normalization.value,
    }
    target = Path(path)
    with target.open("w", encoding="utf-8", newline="") as handle:
        for key, value in meta.items():
            handle.write(f"# {key}: {value}\n")
        frame.to_csv(handle, float_format="%.17g")
    return target


def read_grid_csv(path: PathLike) -> QuasiDistGrid:
    target = Path(path)
    meta, skip = read_comment_header(target)
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
        order = SOrder(int(meta["s"]))
        normalization = Normalization(meta.get("normalization", "raw"))
    except (KeyError, ValueError) as err:
        raise SchemaError(f"{target} lacks a valid grid header: {err}") from err
    header = validate_header(header.dump(), "grid")
    space = space_from_header(header)
    frame = pd.read_csv(target, skiprows=skip, index_col=0, float_precision="round_trip")
    if list(frame.index.astype(str)) != list(frame.columns.astype(str)):
        raise SchemaError("Row and column labels of a grid CSV must agree.")
    shown = frame.to_numpy(dtype=np.float64)
    return QuasiDistGrid(_restore(space, [str(label) for label in frame.columns], shown), order, space, normalization)
