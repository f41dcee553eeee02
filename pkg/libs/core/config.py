"""Shared configuration for the wall-crossing calculator.

Configuration only shapes logging and output; it never changes a computed
polynomial. A file is read only when its path is passed explicitly.
"""

import tomllib
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict
from pydantic import ValidationError as PydanticValidationError

from .errors import ConfigurationError
from .logging import get_logger

logger = get_logger("config")


@dataclass
class CalculatorConfig:
    """Runtime configuration for the calculator and its CLI."""

    # Logging
    log_level: str = "WARNING"
    log_file: Optional[Path] = None
    structured_logs: bool = True

    # Output
    json_indent: int = 2

    def __post_init__(self):
        if self.log_level.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ConfigurationError(f"Unknown log level: {self.log_level}")
        if self.json_indent < 0:
            raise ConfigurationError("json_indent must be non-negative")
        if self.log_file is not None:
            self.log_file = Path(self.log_file)


class _FileConfig(BaseModel):
    """Keys accepted in a config file; values are checked strictly."""
    model_config = ConfigDict(extra="ignore", strict=True)

    log_level: Optional[str] = None
    log_file: Optional[str] = None
    structured_logs: Optional[bool] = None
    json_indent: Optional[int] = None


def _read_file(config_path: Path) -> Dict[str, Any]:
    if not config_path.exists():
        raise ConfigurationError(f"Config file not found: {config_path}")
    try:
        with open(config_path, "rb") as f:
            file_config = tomllib.load(f)
    except tomllib.TOMLDecodeError as e:
        raise ConfigurationError(f"Invalid TOML in {config_path}: {e}") from e

    for key in file_config:
        if key not in _FileConfig.model_fields:
            logger.warning(f"Ignoring unknown config key: {key}")
    try:
        parsed = _FileConfig.model_validate(file_config)
    except PydanticValidationError as e:
        problems = "; ".join(
            f"'{'.'.join(str(part) for part in err['loc'])}': {err['msg']}" for err in e.errors()
        )
        raise ConfigurationError(f"Invalid config in {config_path}: {problems}") from e
    return parsed.model_dump(exclude_none=True)


def load_config(
    config_path: Optional[Path] = None,
    overrides: Optional[Dict[str, Any]] = None
) -> CalculatorConfig:
    """
    Load configuration from an explicit TOML file and flag overrides.
    Priority: flags > file > defaults
    """
    values: Dict[str, Any] = {}

    if config_path is not None:
        values.update(_read_file(Path(config_path)))

    for key, value in (overrides or {}).items():
        if value is not None and key in {f.name for f in fields(CalculatorConfig)}:
            values[key] = value

    return CalculatorConfig(**values)
