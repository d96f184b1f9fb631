"""
Runtime factory: one call configures settings, logging and the cache.
"""

from qdepth.factory.runtime import PACKAGE_LOGGER, configure_runtime

__all__ = ["PACKAGE_LOGGER", "configure_runtime"]
