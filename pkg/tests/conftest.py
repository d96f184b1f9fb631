import random

import pytest

from qdepth.cache import set_cache
from qdepth.config.testing import TestingSettings

QDEPTH_ENV_VARS = (
    "QDEPTH_ENV",
    "QDEPTH_MAX_N",
    "QDEPTH_ORACLE_MAX_N",
    "QDEPTH_SEED",
    "QDEPTH_WORKERS",
    "SELFTEST_SCALE",
    "METRICS_FILE",
    "CACHE_MAX_ENTRIES",
    "LOG_LEVEL",
    "LOG_JSON_FORMAT",
    "DEBUG",
    "APP_NAME",
)


@pytest.fixture(autouse=True)
def clear_env(monkeypatch):
    # Settings are read from the environment on every get_settings() call
    for name in QDEPTH_ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    yield


@pytest.fixture(autouse=True)
def fresh_cache():
    """Every test starts from an empty process cache."""
    set_cache(None)
    yield
    set_cache(None)


@pytest.fixture
def testing_settings():
    return TestingSettings()


@pytest.fixture
def rng():
    """Seeded generator for tests that draw random instances."""
    return random.Random(1729)

