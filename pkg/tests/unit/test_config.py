"""
Unit tests for the config module.

These tests cover:
- Default and environment-based settings loading
- Validators for the size caps, worker count and selftest scale
- Environment selection logic (development, testing, production)
"""

import pytest
from pydantic import ValidationError

from qdepth.config import HARD_MAX_N, BaseQDepthSettings, get_settings
from qdepth.config.development import DevelopmentSettings
from qdepth.config.production import ProductionSettings
from qdepth.config.testing import TestingSettings


def test_base_settings_defaults():
    settings = BaseQDepthSettings()
    assert settings.APP_NAME == "qdepth"
    assert settings.DEBUG is False
    assert settings.LOG_LEVEL == "WARNING"
    assert settings.QDEPTH_MAX_N == 24
    assert settings.QDEPTH_ORACLE_MAX_N == 10
    assert settings.QDEPTH_SEED == 1729
    assert settings.QDEPTH_WORKERS == 1
    assert settings.SELFTEST_SCALE == 1.0
    assert settings.METRICS_FILE is None
    assert settings.CACHE_MAX_ENTRIES == 100_000


def test_env_override(monkeypatch):
    monkeypatch.setenv("QDEPTH_MAX_N", "12")
    monkeypatch.setenv("QDEPTH_SEED", "7")
    monkeypatch.setenv("LOG_LEVEL", "debug")
    settings = BaseQDepthSettings()
    assert settings.QDEPTH_MAX_N == 12
    assert settings.QDEPTH_SEED == 7
    assert settings.LOG_LEVEL == "DEBUG"


@pytest.mark.parametrize("field", ["QDEPTH_MAX_N", "QDEPTH_ORACLE_MAX_N"])
@pytest.mark.parametrize("value", [0, HARD_MAX_N + 1])
def test_cap_validator_rejects_out_of_range(field, value):
    with pytest.raises(ValidationError) as exc:
        BaseQDepthSettings(**{field: value})
    assert field in str(exc.value)


def test_cap_validator_accepts_hard_max():
    assert BaseQDepthSettings(QDEPTH_MAX_N=HARD_MAX_N).QDEPTH_MAX_N == HARD_MAX_N


def test_workers_and_scale_validators():
    with pytest.raises(ValidationError):
        BaseQDepthSettings(QDEPTH_WORKERS=0)
    with pytest.raises(ValidationError):
        BaseQDepthSettings(SELFTEST_SCALE=0)
    with pytest.raises(ValidationError):
        BaseQDepthSettings(CACHE_MAX_ENTRIES=0)


def test_invalid_env_value_raises(monkeypatch):
    monkeypatch.setenv("QDEPTH_ORACLE_MAX_N", "100")
    with pytest.raises(ValidationError):
        get_settings()


@pytest.mark.parametrize(
    "env,cls",
    [
        ("development", DevelopmentSettings),
        ("testing", TestingSettings),
        ("production", ProductionSettings),
        ("anything-else", DevelopmentSettings),
    ],
)
def test_get_settings_selects_environment(monkeypatch, env, cls):
    monkeypatch.setenv("QDEPTH_ENV", env)
    assert type(get_settings()) is cls


def test_get_settings_defaults_to_development():
    assert isinstance(get_settings(), DevelopmentSettings)


def test_environment_specific_values():
    assert TestingSettings().SELFTEST_SCALE == 0.1
    assert TestingSettings().DEBUG is True
    production = ProductionSettings()
    assert production.LOG_JSON_FORMAT is True
    assert production.LOG_LEVEL == "INFO"
