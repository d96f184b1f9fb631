"""
Custom log formatters for qdepth.

Currently supports JSON formatting for structured logging of long scans.
"""

import json
import logging
from datetime import datetime

# Attributes every LogRecord carries; anything else arrived through extra=...
_RESERVED = frozenset(
    vars(logging.LogRecord("", 0, "", 0, "", (), None)).keys()
) | {"message", "asctime"}


class JsonFormatter(logging.Formatter):
    """
    Format log records as JSON lines.

    Includes timestamp, level, logger name and message, followed by any fields
    passed through ``extra=``. Values that are not JSON serializable are
    rendered with ``str``; large integers therefore stay exact.
    """

    def format(self, record: logging.LogRecord) -> str:
        """
        Format the specified record as JSON.

        Args:
            record: Log record to format

        Returns:
            JSON string containing the formatted log record
        """
        log_data = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        for key, value in record.__dict__.items():
            if key not in _RESERVED and not key.startswith("_"):
                log_data[key] = value
        return json.dumps(log_data, default=str)
