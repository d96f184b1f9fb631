"""
Base configuration module for qdepth.

This module provides the base settings class that the environment-specific
settings classes inherit from. It covers logging, the enumeration and oracle
size caps, the seed for randomized suites and the optional metrics textfile.
"""

from typing import Optional

from pydantic import ConfigDict, Field, field_validator
from pydantic_settings import BaseSettings

# Subsets are stored as machine-word bitmasks.
HARD_MAX_N = 62


class BaseQDepthSettings(BaseSettings):
    """
    Base settings class for qdepth.

    Attributes:
        APP_NAME: Tool name used in log records and metric labels
        DEBUG: Forces the DEBUG log level
        VERSION: Tool version reported in error metadata
        LOG_LEVEL: Level of the stderr log handler
        LOG_JSON_FORMAT: Emit log records as JSON lines
        QDEPTH_MAX_N: Largest ambient size for which posets are enumerated
        QDEPTH_ORACLE_MAX_N: Largest ambient size accepted by the sdepth oracle
        QDEPTH_SEED: Seed for the randomized property suites
        QDEPTH_WORKERS: Worker processes used by scans
        SELFTEST_SCALE: Multiplier applied to randomized selftest case counts
        METRICS_FILE: Prometheus textfile written at the end of a CLI run
        CACHE_MAX_ENTRIES: Entry limit of the process cache
    """

    APP_NAME: str = Field(default="qdepth")
    DEBUG: bool = Field(default=False)
    VERSION: str = Field(default="0.1.0")

    # Logging configuration
    LOG_LEVEL: str = Field(default="WARNING", description="Stderr log level")
    LOG_JSON_FORMAT: bool = Field(
        default=False, description="Emit log records as JSON lines"
    )

    # Computation caps
    QDEPTH_MAX_N: int = Field(
        default=24,
        description="Enumeration cap: poset-backed operations refuse larger n",
    )
    QDEPTH_ORACLE_MAX_N: int = Field(
        default=10,
        description="Stanley depth oracle cap (runtime is exponential in n)",
    )

    # Reproducibility and scans
    QDEPTH_SEED: int = Field(
        default=1729, description="Seed for the randomized property suites"
    )
    QDEPTH_WORKERS: int = Field(default=1, description="Worker processes for scans")
    SELFTEST_SCALE: float = Field(
        default=1.0, description="Multiplier on randomized selftest case counts"
    )

    # Monitoring configuration
    METRICS_FILE: Optional[str] = Field(
        default=None, description="Prometheus textfile written after a CLI run"
    )

    # Caching
    CACHE_MAX_ENTRIES: int = Field(
        default=100_000, description="Entry limit of the process cache"
    )

    @field_validator("LOG_LEVEL", mode="before")
    def normalize_log_level(cls, value):
        """Accept log levels in any case."""
        if isinstance(value, str):
            return value.upper()
        return value

    @field_validator("QDEPTH_MAX_N", "QDEPTH_ORACLE_MAX_N")
    def validate_cap(cls, value, info):
        """
        Ensure a size cap fits the bitmask representation of subsets.
        """
        if not 1 <= value <= HARD_MAX_N:
            raise ValueError(
                f"{info.field_name} must be between 1 and {HARD_MAX_N}. "
                f"You provided: {value}"
            )
        return value

    @field_validator("QDEPTH_WORKERS")
    def validate_workers(cls, value):
        if value < 1:
            raise ValueError(f"QDEPTH_WORKERS must be at least 1. You provided: {value}")
        return value

    @field_validator("CACHE_MAX_ENTRIES")
    def validate_cache_size(cls, value):
        if value < 1:
            raise ValueError(f"CACHE_MAX_ENTRIES must be at least 1. You provided: {value}")
        return value

    @field_validator("SELFTEST_SCALE")
    def validate_scale(cls, value):
        if value <= 0:
            raise ValueError(f"SELFTEST_SCALE must be positive. You provided: {value}")
        return value

    model_config = ConfigDict(env_file=".env", case_sensitive=True, extra="ignore")
