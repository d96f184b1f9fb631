from typing import Any, Dict, Hashable, Optional

from qdepth.cache.base import BaseCache


class MemoryCache(BaseCache):
    """
    In-process dictionary cache.

    Values live for the lifetime of the process. When ``max_entries`` is set
    and reached, the cache is emptied before the next insert; exact integers
    are cheap to recompute, so no eviction order is kept.
    """

    def __init__(self, max_entries: Optional[int] = None):
        if max_entries is not None and max_entries < 1:
            raise ValueError("max_entries must be positive")
        self._store: Dict[Hashable, Any] = {}
        self._max_entries = max_entries
        self.hits = 0
        self.misses = 0

    def get(self, key: Hashable) -> Optional[Any]:
        value = self._store.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def set(self, key: Hashable, value: Any) -> None:
        if self._max_entries is not None and len(self._store) >= self._max_entries:
            self._store.clear()
        self._store[key] = value

    def delete(self, key: Hashable) -> None:
        self._store.pop(key, None)

    def clear(self, prefix: Optional[str] = None) -> None:
        if prefix is None:
            self._store.clear()
            return
        for key in [k for k in self._store if _namespace(k).startswith(prefix)]:
            del self._store[key]

    @property
    def max_entries(self) -> Optional[int]:
        return self._max_entries

    def __len__(self) -> int:
        return len(self._store)


def _namespace(key: Hashable) -> str:
    if isinstance(key, tuple) and key:
        return str(key[0])
    return str(key)
