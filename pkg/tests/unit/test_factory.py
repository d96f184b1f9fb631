"""
Unit tests for the runtime factory.

Covers:
- Settings loading and defaulting
- Package logger configuration
- Passing a preconfigured logger through
"""

import logging
from unittest.mock import MagicMock

from qdepth.cache import MemoryCache, get_cache
from qdepth.config.development import DevelopmentSettings
from qdepth.factory import PACKAGE_LOGGER, configure_runtime


def test_configure_runtime_with_settings(testing_settings):
    settings, log = configure_runtime(testing_settings)
    assert settings is testing_settings
    assert log.name == PACKAGE_LOGGER
    # TestingSettings sets DEBUG
    assert log.level == logging.DEBUG


def test_configure_runtime_loads_settings(monkeypatch):
    monkeypatch.setenv("QDEPTH_MAX_N", "12")
    settings, log = configure_runtime()
    assert isinstance(settings, DevelopmentSettings)
    assert settings.QDEPTH_MAX_N == 12
    assert log.level == logging.WARNING


def test_configure_runtime_keeps_given_logger(testing_settings):
    logger = MagicMock()
    _, log = configure_runtime(testing_settings, logger=logger)
    assert log is logger
    logger.debug.assert_called_once()


def test_configure_runtime_installs_bounded_cache(testing_settings):
    settings = testing_settings.model_copy(update={"CACHE_MAX_ENTRIES": 50})
    configure_runtime(settings)
    store = get_cache()
    assert isinstance(store, MemoryCache)
    assert store.max_entries == 50
