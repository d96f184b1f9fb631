"""
Logging configuration for qdepth.

Records go to stderr: stdout is reserved for command output, which must be
byte-identical across runs with the same configuration.

Limitations:
- One stderr handler per configured logger; no files or rotation
- Reconfiguring a logger replaces its handler
"""

import logging
import sys
from typing import Optional, Tuple, Union

from qdepth.config.base import BaseQDepthSettings
from qdepth.logging.formatters import JsonFormatter

Logger = Union[logging.Logger, object]

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _resolve_level(level: str, debug: bool) -> int:
    if debug:
        return logging.DEBUG
    value = logging.getLevelName(level.upper())
    # getLevelName returns a "Level x" string for unknown names
    return value if isinstance(value, int) else logging.WARNING


def _stderr_handler(level: int, fmt: str, json_format: bool) -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(JsonFormatter() if json_format else logging.Formatter(fmt))
    return handler


def setup_logger(
    name: str,
    level: str = "WARNING",
    format: str = DEFAULT_FORMAT,
    debug: bool = False,
    json_format: bool = False,
) -> Logger:
    """
    Point the logger ``name`` at a single stderr handler.

    Unknown level names fall back to WARNING; ``debug`` wins over ``level``.
    The logger stops propagating so records are not printed twice when the
    root logger also has a handler.
    """
    resolved = _resolve_level(level, debug)
    logger = logging.getLogger(name)
    logger.setLevel(resolved)
    logger.propagate = False
    logger.handlers.clear()
    logger.addHandler(_stderr_handler(resolved, format, json_format))
    return logger


def _options(settings: Optional[BaseQDepthSettings]) -> Tuple[str, bool, bool]:
    if settings is None:
        return "WARNING", False, False
    return (
        str(getattr(settings, "LOG_LEVEL", "WARNING")),
        bool(getattr(settings, "DEBUG", False)),
        bool(getattr(settings, "LOG_JSON_FORMAT", False)),
    )


def get_logger(
    name: str,
    settings: Optional[BaseQDepthSettings] = None,
    json_format: Optional[bool] = None,
) -> Logger:
    """
    Configure ``name`` from LOG_LEVEL, DEBUG and LOG_JSON_FORMAT.

    Args:
        name: Logger name
        settings: Settings to read; WARNING and plain text without them
        json_format: Overrides LOG_JSON_FORMAT when given
    """
    level, debug, use_json = _options(settings)
    if json_format is not None:
        use_json = json_format
    return setup_logger(name, level=level, debug=debug, json_format=use_json)


def ensure_logger(
    logger: Optional[Logger] = None,
    name: str = None,
    settings: Optional[BaseQDepthSettings] = None,
    json_format: Optional[bool] = None,
) -> Logger:
    """
    Return ``logger`` unchanged, or configure a new one called ``name``.

    Raises:
        ValueError: when neither a logger nor a name is given
    """
    if logger:
        return logger
    if not name:
        raise ValueError("Module name must be provided when logger is not specified")
    return get_logger(name, settings, json_format)
