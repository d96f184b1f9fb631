"""
qdepth cache module: public API

Features:
- In-process dictionary backend (MemoryCache)
- Function-level sync memoization decorator

Limitations:
- Only the in-memory backend is implemented
- No TTL; entries live until cleared or the process exits
"""
from qdepth.cache.backends import MemoryCache
from qdepth.cache.base import BaseCache
from qdepth.cache.decorators import cache
from qdepth.cache.manager import get_cache, set_cache

__all__ = [
    "BaseCache",
    "MemoryCache",
    "cache",
    "get_cache",
    "set_cache",
]
