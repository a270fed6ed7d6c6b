"""Display orderings of field elements along grid axes.

``lex``
    Coordinate tuples in the active basis, first coordinate most significant.
    This is also the Hilbert-space index order of :class:`QuditSpace`.
``dlog``
    0 first, then sigma^0, sigma^1, ..., sigma^(q-2).
``file``
    An explicit permutation of element labels, one per line (``#`` comments
    allowed). The packaged ``fig2`` ordering is available by name.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path
from typing import List, Union

import numpy as np

from phasevault._types._alias import IntArray
from phasevault.core.exceptions import ParseError
from phasevault.field.basis import Basis, parse_element
from phasevault.field.core import FieldContext

__all__ = ["ORDERING_MODES", "element_ordering", "read_ordering_labels", "packaged_ordering_path"]

ORDERING_MODES = ("lex", "dlog", "file")
_PACKAGED = {"fig2": "fig2_ordering.txt"}


def packaged_ordering_path(name: str) -> Path:
    if name not in _PACKAGED:
        raise KeyError(f"No packaged ordering {name!r}; available: {sorted(_PACKAGED)}.")
    return Path(str(resources.files("phasevault.data").joinpath(_PACKAGED[name])))


def read_ordering_labels(path: Union[str, Path]) -> List[str]:
    text = Path(path).read_text(encoding="utf-8")
    labels: List[str] = []
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            labels.extend(token for token in stripped.replace(",", " ").split() if token)
    return labels


def element_ordering(
    ctx: FieldContext,
    basis: Basis,
    mode: str = "lex",
    path: Union[str, Path, None] = None,
) -> IntArray:
    """Element codes in display order."""
    if mode == "lex":
        tuples = np.array(np.unravel_index(np.arange(ctx.order), (ctx.d,) * ctx.n)).T
        return basis.compose_codes(tuples)
    if mode == "dlog":
        return np.concatenate([np.zeros(1, dtype=np.int64), np.asarray(ctx.antilog, dtype=np.int64)])
    if mode == "file":
        if path is None:
            raise ValueError("ordering=file needs a path.")
        resolved = packaged_ordering_path(str(path)) if str(path) in _PACKAGED else Path(path)
        codes = np.array([parse_element(label, ctx, basis).code for label in read_ordering_labels(resolved)])
        if sorted(codes.tolist()) != list(range(ctx.order)):
            raise ParseError(f"{resolved} does not list every element of GF({ctx.d}^{ctx.n}) exactly once.")
        return codes.astype(np.int64)
    raise ValueError(f"Unknown ordering {mode!r}; expected one of {ORDERING_MODES}.")
