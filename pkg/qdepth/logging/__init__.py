"""
Logging module for qdepth.

Console (stderr) logging configured from settings, with an optional JSON
formatter for unattended scans.
"""

from qdepth.logging.formatters import JsonFormatter
from qdepth.logging.manager import Logger, ensure_logger, get_logger, setup_logger

__all__ = [
    "Logger",
    "get_logger",
    "ensure_logger",
    "setup_logger",
    "JsonFormatter",
]
