from phasevault.io.grid_io import display_order, read_grid_csv, read_grid_json, write_grid_csv, write_grid_json
from phasevault.io.operator_io import read_operator_csv, read_operator_json, write_operator_csv, write_operator_json
from phasevault.io.schema import SCHEMA_VERSION, FileHeader
from phasevault.io.state_io import read_state_json, write_state_json

__all__ = [
    "SCHEMA_VERSION",
    "FileHeader",
    "display_order",
    "read_grid_csv",
    "read_grid_json",
    "read_operator_csv",
    "read_operator_json",
    "read_state_json",
    "write_grid_csv",
    "write_grid_json",
    "write_operator_csv",
    "write_operator_json",
    "write_state_json",
]
