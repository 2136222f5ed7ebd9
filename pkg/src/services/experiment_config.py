"""
Experiment configuration files.

A config file is a flat ``KEY=VALUE`` document (``#`` comments allowed):

    NETWORKS=MN|data/mn.csv|edgelist,JU|data/ju.csv|matrix
    MODE=edges
    TOREM_MAX=0.10
    STEPS=10
    NREP=100
    SEED=0
    METRICS=dA,dL,dNL,dRootED,simDC
    OUTPUT=results.csv

A fourth field ``symmetrize`` folds a directed matrix (``CV|cv.csv|matrix|symmetrize``).
``FRACTIONS=0.01,0.05,0.1`` may replace ``TOREM_MAX``/``STEPS``. Relative
network paths are resolved against the config file's directory. Values given
as overrides (the command line) win over the file, the file wins over the
environment defaults.
"""
import logging
import os
from typing import Any, Dict, List, Mapping, Optional

from dotenv import dotenv_values
from pydantic import ValidationError

from config.config import get_config
from src.exceptions import ConfigError
from src.schemas import ExperimentConfig, NetworkSource, fraction_grid

logger = logging.getLogger(__name__)

KNOWN_KEYS = {
    "NETWORKS",
    "MODE",
    "FRACTIONS",
    "TOREM_MAX",
    "STEPS",
    "NREP",
    "SEED",
    "METRICS",
    "OUTPUT",
    "JSON_OUTPUT",
    "WORKERS",
    "DELIMITER",
}


def _split(value: str) -> List[str]:
    return [part.strip() for part in str(value).split(",") if part.strip()]


def parse_networks(value: str, base_dir: Optional[str] = None) -> List[NetworkSource]:
    """
    Parse ``name|path[|format[|symmetrize]]`` entries separated by commas.

    Raises:
        ConfigError: On an entry without a path
    """
    sources = []
    for entry in _split(value):
        parts = [p.strip() for p in entry.split("|")]
        if len(parts) not in (2, 3, 4) or not parts[0] or not parts[1]:
            raise ConfigError(f"NETWORKS: cannot parse entry {entry!r} (expected name|path[|format])")
        if len(parts) == 4 and parts[3] != "symmetrize":
            raise ConfigError(f"NETWORKS: unknown option {parts[3]!r} in entry {entry!r}")
        path = parts[1]
        if base_dir and not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        fields: Dict[str, Any] = {"name": parts[0], "path": path}
        if len(parts) >= 3 and parts[2]:
            fields["format"] = parts[2]
        fields["symmetrize"] = len(parts) == 4
        try:
            sources.append(NetworkSource(**fields))
        except ValidationError as e:
            raise ConfigError(f"NETWORKS: {_first_error(e)}") from None
    return sources


def _first_error(e: ValidationError) -> str:
    error = e.errors()[0]
    where = ".".join(str(part) for part in error["loc"])
    return f"{where}: {error['msg']}" if where else error["msg"]


def read_config_file(path: str) -> Dict[str, str]:
    """
    Read a ``KEY=VALUE`` config file.

    Raises:
        ConfigError: If the file is missing or contains unknown keys
    """
    if not os.path.isfile(path):
        raise ConfigError(f"config file not found: {path}")
    values = {k.strip().upper(): v for k, v in dotenv_values(path).items() if v is not None}
    unknown = sorted(set(values) - KNOWN_KEYS)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    return values


def load_experiment_config(
    path: Optional[str] = None, overrides: Optional[Mapping[str, Any]] = None
) -> ExperimentConfig:
    """
    Build an experiment configuration from a file and overrides.

    Args:
        path: Optional config file
        overrides: Values keyed like the file (``NREP``, ``MODE``, ...); ``None`` values are ignored

    Returns:
        ExperimentConfig: Validated configuration

    Raises:
        ConfigError: Naming the offending field
    """
    defaults = get_config()
    file_values: Dict[str, Any] = read_config_file(path) if path else {}
    cli_values = {k.upper(): v for k, v in (overrides or {}).items() if v is not None}
    unknown = sorted(set(cli_values) - KNOWN_KEYS)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    merged = {**file_values, **cli_values}
    base_dir = os.path.dirname(os.path.abspath(path)) if path else None

    if "NETWORKS" not in merged:
        raise ConfigError("networks: at least one network is required")
    networks = merged["NETWORKS"]
    if isinstance(networks, str):
        networks = parse_networks(networks, base_dir if "NETWORKS" in file_values
                                  and "NETWORKS" not in cli_values else None)

    try:
        if "TOREM_MAX" in cli_values or "STEPS" in cli_values or (
            "FRACTIONS" not in merged and ("TOREM_MAX" in merged or "STEPS" in merged)
        ):
            fractions = fraction_grid(
                float(merged.get("TOREM_MAX", defaults.DEFAULT_TOREM_MAX)),
                int(merged.get("STEPS", defaults.DEFAULT_STEPS)),
            )
        elif "FRACTIONS" in merged:
            raw = merged["FRACTIONS"]
            fractions = [float(f) for f in (_split(raw) if isinstance(raw, str) else raw)]
        else:
            fractions = fraction_grid(defaults.DEFAULT_TOREM_MAX, defaults.DEFAULT_STEPS)
    except ValueError as e:
        raise ConfigError(f"fractions: {e}") from None

    metrics = merged.get("METRICS", list(defaults.DEFAULT_METRICS))
    if isinstance(metrics, str):
        metrics = _split(metrics)

    fields: Dict[str, Any] = {
        "networks": networks,
        "mode": merged.get("MODE", "edges"),
        "fractions": fractions,
        "nrep": merged.get("NREP", defaults.DEFAULT_NREP),
        "base_seed": merged.get("SEED", defaults.DEFAULT_SEED),
        "metrics": metrics,
        "output_path": merged.get("OUTPUT", "results.csv"),
        "json_output_path": merged.get("JSON_OUTPUT"),
        "workers": merged.get("WORKERS", defaults.DEFAULT_WORKERS),
        "delimiter": merged.get("DELIMITER", defaults.DEFAULT_DELIMITER),
    }
    try:
        cfg = ExperimentConfig(**fields)
    except ValidationError as e:
        raise ConfigError(_first_error(e)) from None
    logger.debug(f"Experiment config: {cfg}")
    return cfg
