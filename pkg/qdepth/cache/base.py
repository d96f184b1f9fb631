from abc import ABC, abstractmethod
from typing import Any, Hashable, Optional


class BaseCache(ABC):
    """
    Interface every qdepth cache backend implements.

    Keys are hashable tuples whose first element is a namespace string, so a
    whole namespace can be dropped with ``clear(prefix)``.
    """

    @abstractmethod
    def get(self, key: Hashable) -> Optional[Any]:
        """Stored value for ``key``, or None on a miss."""

    @abstractmethod
    def set(self, key: Hashable, value: Any) -> None:
        """Store ``value`` under ``key``."""

    @abstractmethod
    def delete(self, key: Hashable) -> None:
        """Forget ``key``; a missing key is not an error."""

    @abstractmethod
    def clear(self, prefix: Optional[str] = None) -> None:
        """Drop one namespace, or everything when ``prefix`` is None."""
