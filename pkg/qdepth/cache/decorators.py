import functools
from typing import Any, Callable, Optional

from qdepth.cache.manager import get_cache


def cache(
    prefix: Optional[str] = None,
) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """
    Decorator memoizing a pure function in the process cache.

    Arguments must be hashable. The key is the namespace (``prefix`` or the
    function's qualified name) followed by the positional arguments and the
    sorted keyword arguments. A None result is never cached.

    Args:
        prefix: Optional namespace for the cache keys
    """

    def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
        namespace = prefix or f"{func.__module__}.{func.__qualname__}"

        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            cache_instance = get_cache()
            if kwargs:
                key = (namespace, args, tuple(sorted(kwargs.items())))
            else:
                key = (namespace, args)

            cached = cache_instance.get(key)
            if cached is not None:
                return cached

            result = func(*args, **kwargs)
            if result is not None:
                cache_instance.set(key, result)
            return result

        wrapper.cache_namespace = namespace  # type: ignore[attr-defined]
        return wrapper

    return decorator
