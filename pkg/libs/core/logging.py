"""Centralized logging setup for the wall-crossing calculator."""

import json
import logging
import sys
from datetime import datetime, timezone
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

ROOT_COMPONENT = "wallcalc"

# Extra record attributes copied into structured output when present.
EXTRA_FIELDS = ("scenario", "model", "alpha")


class StructuredFormatter(logging.Formatter):
    """JSON structured log formatter."""

    def format(self, record: logging.LogRecord) -> str:
        log_obj = {
            "ts": datetime.now(timezone.utc).isoformat().replace("+00:00", "Z"),
            "level": record.levelname,
            "component": record.name,
            "msg": record.getMessage(),
        }

        for key in EXTRA_FIELDS:
            if hasattr(record, key):
                log_obj[key] = str(getattr(record, key))

        if record.exc_info:
            log_obj["exc_info"] = self.formatException(record.exc_info)

        return json.dumps(log_obj)


def _formatter(structured: bool) -> logging.Formatter:
    if structured:
        return StructuredFormatter()
    return logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')


def setup_logging(
    component: str = ROOT_COMPONENT,
    log_level: str = "WARNING",
    log_file: Optional[Path] = None,
    structured: bool = True
) -> logging.Logger:
    """
    Setup logging for a component with console and optional file handlers.

    Args:
        component: Logger name; library loggers live below ``wallcalc``
        log_level: Logging level name
        log_file: Optional log file path (rotated at 10MB, 5 backups)
        structured: Use structured JSON logging

    Returns:
        Configured logger instance
    """
    level = getattr(logging, log_level.upper(), None)
    if not isinstance(level, int):
        raise ValueError(f"Unknown log level: {log_level}")

    logger = logging.getLogger(component)
    logger.setLevel(level)

    # Remove existing handlers
    logger.handlers = []

    # stdout is reserved for reports
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(_formatter(structured))
    logger.addHandler(console_handler)

    if log_file:
        log_file = Path(log_file)
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            log_file, maxBytes=10*1024*1024, backupCount=5
        )
        file_handler.setFormatter(_formatter(structured))
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str) -> logging.Logger:
    """Return a logger namespaced under the calculator root component."""
    if name == ROOT_COMPONENT or name.startswith(ROOT_COMPONENT + "."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_COMPONENT}.{name}")
