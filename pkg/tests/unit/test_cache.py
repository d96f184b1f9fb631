"""
Unit tests for the cache module.

Covers:
- BaseCache abstract class
- MemoryCache get/set/delete, namespace clearing and the entry limit
- Process cache management (get_cache, set_cache)
- The memoization decorator: hits, misses, namespaces and None results
"""

from abc import ABC
from unittest.mock import MagicMock, patch

import pytest

from qdepth.cache import BaseCache, MemoryCache, cache, get_cache, set_cache


class TestBaseCache:
    def test_base_cache_is_abstract(self):
        assert issubclass(BaseCache, ABC)
        assert BaseCache.__abstractmethods__ == {"get", "set", "delete", "clear"}
        with pytest.raises(TypeError):
            BaseCache()


class TestMemoryCache:
    def test_set_get_delete(self):
        store = MemoryCache()
        assert store.get(("ns", 1)) is None
        store.set(("ns", 1), 10)
        assert store.get(("ns", 1)) == 10
        store.delete(("ns", 1))
        assert store.get(("ns", 1)) is None
        assert (store.hits, store.misses) == (1, 2)

    def test_clear_by_prefix(self):
        store = MemoryCache()
        store.set(("binom", (5, 2)), 10)
        store.set(("alpha_veronese", (4, 2)), "x")
        store.clear("binom")
        assert store.get(("binom", (5, 2))) is None
        assert store.get(("alpha_veronese", (4, 2))) == "x"
        store.clear()
        assert len(store) == 0

    def test_max_entries_empties_before_insert(self):
        store = MemoryCache(max_entries=2)
        store.set("a", 1)
        store.set("b", 2)
        store.set("c", 3)
        assert len(store) == 1
        assert store.get("c") == 3

    def test_invalid_max_entries(self):
        with pytest.raises(ValueError):
            MemoryCache(max_entries=0)


class TestCacheManager:
    def test_get_cache_creates_memory_cache_once(self):
        first = get_cache()
        assert isinstance(first, MemoryCache)
        assert get_cache() is first

    def test_get_cache_is_bounded_by_settings(self, monkeypatch):
        assert get_cache().max_entries == 100_000
        set_cache(None)
        monkeypatch.setenv("CACHE_MAX_ENTRIES", "7")
        assert get_cache().max_entries == 7

    def test_set_cache_replaces_instance(self):
        custom = MemoryCache()
        set_cache(custom)
        assert get_cache() is custom
        set_cache(None)
        assert get_cache() is not custom


class TestCacheDecorator:
    def test_cache_decorator_hit(self):
        mock_cache = MagicMock()
        mock_cache.get.return_value = "cached_result"
        with patch("qdepth.cache.decorators.get_cache", return_value=mock_cache):

            @cache()
            def test_func(a, b):
                raise AssertionError("Function should not be called on cache hit")

            assert test_func(1, 2) == "cached_result"
            mock_cache.set.assert_not_called()

    def test_cache_decorator_miss_stores_result(self):
        calls = []

        @cache(prefix="add")
        def add(a, b):
            calls.append((a, b))
            return a + b

        assert add(1, 2) == 3
        assert add(1, 2) == 3
        assert calls == [(1, 2)]
        assert get_cache().get(("add", (1, 2))) == 3

    def test_keyword_arguments_are_part_of_the_key(self):
        @cache(prefix="kw")
        def scaled(a, factor=1):
            return a * factor

        assert scaled(2, factor=3) == 6
        assert scaled(2, factor=4) == 8
        assert get_cache().get(("kw", (2,), (("factor", 3),))) == 6

    def test_default_namespace_is_qualified_name(self):
        @cache()
        def square(x):
            return x * x

        assert square.cache_namespace.endswith("square")
        square(3)
        assert get_cache().get((square.cache_namespace, (3,))) == 9

    def test_none_result_is_not_cached(self):
        calls = []

        @cache(prefix="none")
        def nothing(x):
            calls.append(x)
            return None

        nothing(1)
        nothing(1)
        assert calls == [1, 1]
