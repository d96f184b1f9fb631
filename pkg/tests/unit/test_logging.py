"""
Unit tests for the logging module.

Covers:
- Logger creation and retrieval (get_logger, ensure_logger)
- Logger configuration (setup_logger): level, stderr handler, no propagation
- JSON formatter output, including fields passed through ``extra``
"""
import json
import logging
import sys

import pytest

from qdepth.logging import JsonFormatter, ensure_logger, get_logger, setup_logger


@pytest.fixture
def dummy_settings():
    class DummySettings:
        LOG_LEVEL = "DEBUG"
        LOG_JSON_FORMAT = False
        DEBUG = False

    return DummySettings()


def _record(msg="Test message", **extra):
    record = logging.LogRecord(
        name="test.json",
        level=logging.INFO,
        pathname=__file__,
        lineno=123,
        msg=msg,
        args=(),
        exc_info=None,
    )
    for key, value in extra.items():
        setattr(record, key, value)
    return record


def test_get_logger_returns_logger(dummy_settings):
    logger = get_logger("test.module", dummy_settings)
    assert isinstance(logger, logging.Logger)
    assert logger.name == "test.module"
    assert logger.level == logging.DEBUG


def test_get_logger_without_settings_uses_warning():
    assert get_logger("test.nosettings").level == logging.WARNING


def test_ensure_logger_returns_existing_logger(dummy_settings):
    logger = get_logger("test.ensure", dummy_settings)
    assert ensure_logger(logger, "test.ensure", dummy_settings) is logger


def test_ensure_logger_creates_new_logger(dummy_settings):
    ensured = ensure_logger(None, "test.ensure2", dummy_settings)
    assert isinstance(ensured, logging.Logger)
    assert ensured.name == "test.ensure2"


def test_ensure_logger_raises_without_name():
    with pytest.raises(ValueError):
        ensure_logger()


def test_setup_logger_writes_to_stderr_only():
    logger = setup_logger("test.stderr")
    assert len(logger.handlers) == 1
    assert logger.handlers[0].stream is sys.stderr
    assert logger.propagate is False


def test_setup_logger_debug_flag_overrides_level():
    assert setup_logger("test.debug", level="ERROR", debug=True).level == logging.DEBUG


def test_setup_logger_removes_existing_handlers():
    logger = logging.getLogger("test.handler")
    logger.handlers.clear()
    logger.addHandler(logging.StreamHandler())
    setup_logger("test.handler")
    assert len(logger.handlers) == 1


def test_setup_logger_invalid_level_falls_back_to_warning():
    assert setup_logger("test.invalid", level="NOTALEVEL").level == logging.WARNING


def test_json_format_selected_from_settings(dummy_settings):
    dummy_settings.LOG_JSON_FORMAT = True
    logger = get_logger("test.jsonsettings", dummy_settings)
    assert isinstance(logger.handlers[0].formatter, JsonFormatter)
    plain = get_logger("test.jsonsettings", dummy_settings, json_format=False)
    assert not isinstance(plain.handlers[0].formatter, JsonFormatter)


def test_json_formatter_output():
    data = json.loads(JsonFormatter().format(_record()))
    assert data["message"] == "Test message"
    assert data["level"] == "INFO"
    assert data["logger"] == "test.json"
    assert "timestamp" in data


def test_json_formatter_includes_extra_fields():
    data = json.loads(JsonFormatter().format(_record(n=5, value=2**70)))
    assert data["n"] == 5
    assert data["value"] == 2**70
    assert "pathname" not in data
