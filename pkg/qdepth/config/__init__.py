"""
Configuration module for qdepth.

This module provides:
- BaseQDepthSettings: the base settings class, loaded from environment variables.
- Environment-specific settings (development, testing, production).
- get_settings: factory selecting the settings class from QDEPTH_ENV.

Example environment variables:

QDEPTH_ENV="development"  # Options: development, testing, production
LOG_LEVEL="INFO"
LOG_JSON_FORMAT=false
QDEPTH_MAX_N=24           # enumeration cap (1..62)
QDEPTH_ORACLE_MAX_N=10    # sdepth oracle cap
QDEPTH_SEED=1729
QDEPTH_WORKERS=1
SELFTEST_SCALE=1.0
METRICS_FILE="/var/lib/node_exporter/qdepth.prom"
CACHE_MAX_ENTRIES=100000
"""

from .base import HARD_MAX_N, BaseQDepthSettings
from .settings import get_settings

__all__ = [
    "BaseQDepthSettings",
    "HARD_MAX_N",
    "get_settings",
]
