from __future__ import annotations

from typing import Any, Dict, List, Mapping

from omegaconf import DictConfig, ListConfig
from omegaconf import OmegaConf as om

__all__ = ["load_yaml_config", "parse_cli_args", "merge_configs", "to_dotlist"]


def load_yaml_config(yaml_path: str) -> DictConfig | ListConfig:
    """Load configuration from a YAML file."""
    try:
        with open(yaml_path, encoding="utf-8") as f:
            return om.load(f)
    except OSError as err:
        raise RuntimeError(f"Error reading YAML file: {err}") from err


def parse_cli_args(args: List[str]) -> DictConfig:
    """Parse ``key.sub=value`` dotlist arguments."""
    return om.from_cli(args)


def to_dotlist(overrides: Mapping[str, Any], prefix: str = "") -> List[str]:
    """Flatten a nested mapping into ``a.b=value`` strings, skipping ``None`` leaves.

    Lists are rendered in OmegaConf's flow syntax so ``[31]`` survives.
    """
    dotlist: List[str] = []
    for key, value in overrides.items():
        dotted = f"{prefix}{key}"
        if value is None:
            continue
        if isinstance(value, Mapping):
            dotlist.extend(to_dotlist(value, prefix=f"{dotted}."))
        elif isinstance(value, (list, tuple)):
            items = ",".join(f"'{item}'" if isinstance(item, str) else str(item) for item in value)
            dotlist.append(f"{dotted}=[{items}]")
        elif isinstance(value, str):
            dotlist.append(f"{dotted}='{value}'")
        else:
            dotlist.append(f"{dotted}={value}")
    return dotlist


def merge_configs(yaml_cfg: DictConfig | ListConfig, args_list: List[str]) -> DictConfig | ListConfig:
    """Merge dotlist overrides on top of a YAML configuration."""
    cli_cfg = parse_cli_args(args_list)
    return om.merge(yaml_cfg, cli_cfg)


def to_plain_dict(cfg: DictConfig | ListConfig) -> Dict[str, Any]:
    container = om.to_container(cfg, resolve=True)
    if not isinstance(container, dict):
        raise TypeError(f"Expected a mapping at the top level, got {type(container).__name__}.")
    return {str(k): v for k, v in container.items()}
