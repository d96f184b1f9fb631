"""
Runtime factory for qdepth commands.

Ties configuration, logging and the process cache together before a command
runs.
"""

from typing import Optional, Tuple

from qdepth.cache import MemoryCache, set_cache
from qdepth.config import BaseQDepthSettings, get_settings
from qdepth.logging import Logger, ensure_logger

PACKAGE_LOGGER = "qdepth"


def configure_runtime(
    settings: Optional[BaseQDepthSettings] = None,
    logger: Optional[Logger] = None,
) -> Tuple[BaseQDepthSettings, Logger]:
    """
    Configure logging for the whole ``qdepth`` package and install a process
    cache bounded by CACHE_MAX_ENTRIES.

    Library modules log through ``logging.getLogger(__name__)``, so configuring
    the package logger routes all of them to stderr with one handler.

    Args:
        settings: Optional settings; loaded from the environment when omitted
        logger: Optional preconfigured logger

    Returns:
        The settings in effect and the package logger
    """
    runtime_settings = settings or get_settings()
    log = ensure_logger(logger, PACKAGE_LOGGER, runtime_settings)
    set_cache(MemoryCache(max_entries=runtime_settings.CACHE_MAX_ENTRIES))
    log.debug(
        "runtime configured",
        extra={
            "max_n": runtime_settings.QDEPTH_MAX_N,
            "oracle_max_n": runtime_settings.QDEPTH_ORACLE_MAX_N,
            "seed": runtime_settings.QDEPTH_SEED,
            "cache_max_entries": runtime_settings.CACHE_MAX_ENTRIES,
        },
    )
    return runtime_settings, log
