"""
Runtime configuration for the GCX toolkit

Defaults, overridden by an optional TOML file (``[gcx]`` table), overridden by the
environment (``.env`` is loaded first).
"""

import logging
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional, Union

import toml
from dotenv import load_dotenv

from src.exceptions import ConfigurationError

logger = logging.getLogger("Config")

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

_ENV_KEYS = {
    "coset_limit": "GCX_COSET_LIMIT",
    "hom_limit": "GCX_HOM_LIMIT",
    "coset_definition_factor": "GCX_COSET_DEFINITION_FACTOR",
    "log_level": "GCX_LOG_LEVEL",
    "log_pretty": "LOG_PRETTY",
    "log_file": "GCX_LOG_FILE",
}


@dataclass(frozen=True)
class GCXConfig:
    """Limits and logging settings"""
    coset_limit: int = 1_000_000
    hom_limit: int = 1_000_000
    coset_definition_factor: int = 8  # total cosets ever defined <= factor * limit
    log_level: str = "WARNING"
    log_pretty: bool = False
    log_file: Optional[str] = None

    def __post_init__(self):
        for name in ("coset_limit", "hom_limit", "coset_definition_factor"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigurationError(f"{name} must be a positive integer", {name: value})
        if self.log_level.upper() not in LOG_LEVELS:
            raise ConfigurationError("unknown log level", {"log_level": self.log_level})

    def with_overrides(self, **overrides: Any) -> "GCXConfig":
        """Copy with the non-None overrides applied"""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def to_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _coerce(name: str, raw: Any) -> Any:
    if name in ("coset_limit", "hom_limit", "coset_definition_factor"):
        try:
            return int(raw)
        except (TypeError, ValueError):
            raise ConfigurationError(f"{name} must be an integer", {name: raw})
    if name == "log_pretty":
        if isinstance(raw, bool):
            return raw
        return str(raw).strip().lower() in ("1", "true", "yes", "on")
    if name == "log_file":
        return str(raw) if raw else None
    return str(raw)


def load_config(path: Optional[Union[str, Path]] = None) -> GCXConfig:
    """Build the effective configuration"""
    load_dotenv()
    values: Dict[str, Any] = {}

    if path is not None:
        try:
            document = toml.load(str(path))
        except FileNotFoundError:
            raise ConfigurationError("config file not found", {"path": str(path)})
        except toml.TomlDecodeError as e:
            raise ConfigurationError(f"invalid TOML: {e}", {"path": str(path)})
        section = document.get("gcx", {})
        unknown = set(section) - set(_ENV_KEYS)
        if unknown:
            raise ConfigurationError("unknown config keys", {"keys": sorted(unknown)})
        for name, raw in section.items():
            values[name] = _coerce(name, raw)

    for name, env_key in _ENV_KEYS.items():
        raw = os.getenv(env_key)
        if raw is not None and raw != "":
            values[name] = _coerce(name, raw)

    config = GCXConfig(**values)
    logger.debug(f"Effective configuration: {config.to_dict()}")
    return config
