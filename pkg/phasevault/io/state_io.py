from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np

from phasevault.config.tolerance import DEFAULT_TOLERANCES, ToleranceConfig
from phasevault.core.exceptions import SchemaError
from phasevault.io.schema import header_for, space_from_header, validate_header
from phasevault.states.vector import StateVector

__all__ = ["write_state_json", "read_state_json"]

PathLike = Union[str, Path]


def write_state_json(state: StateVector, path: PathLike) -> Path:
    """Amplitudes in the index (lex) order of the state's space."""
    payload: Dict[str, Any] = header_for(state.space, "state").dump()
    payload.update(label=state.label, amps=[[float(z.real), float(z.imag)] for z in state.amps])
    target = Path(path)
    target.write_text(json.dumps(payload, indent=2), encoding="utf-8")
    return target


def read_state_json(path: PathLike, tolerances: ToleranceConfig = DEFAULT_TOLERANCES) -> StateVector:
    """Import a state; the norm is checked again and violations raise NormViolation."""
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise SchemaError(f"{path} is not valid JSON: {err}") from err
    header = validate_header(payload, "state")
    space = space_from_header(header)
    amps = np.asarray(payload.get("amps", []), dtype=np.float64)
    if amps.shape != (space.dim, 2):
        raise SchemaError(f"State payload has shape {amps.shape}; expected ({space.dim}, 2).")
    return StateVector(amps[:, 0] + 1j * amps[:, 1], space, payload.get("label", ""), tolerances)
