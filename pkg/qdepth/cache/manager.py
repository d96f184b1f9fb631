"""
Process-wide cache instance.

Worker processes started for scans get their own instance on import.
"""

from typing import Optional

from qdepth.cache.backends import MemoryCache
from qdepth.cache.base import BaseCache
from qdepth.config import get_settings

# Module-level cache instance
_cache: Optional[BaseCache] = None


def get_cache() -> BaseCache:
    """
    Return the process cache.

    On first use a MemoryCache is created, bounded by CACHE_MAX_ENTRIES.
    """
    global _cache
    if _cache is None:
        _cache = MemoryCache(max_entries=get_settings().CACHE_MAX_ENTRIES)
    return _cache


def set_cache(instance: Optional[BaseCache]) -> None:
    """Replace the process cache; None resets to a fresh MemoryCache on next use."""
    global _cache
    _cache = instance
