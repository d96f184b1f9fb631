"""
Environment selection for qdepth settings.

QDEPTH_ENV picks the settings class; unknown or missing values mean
development.
"""

import os
from typing import Dict, Type

from .base import BaseQDepthSettings
from .development import DevelopmentSettings
from .production import ProductionSettings
from .testing import TestingSettings

ENVIRONMENTS: Dict[str, Type[BaseQDepthSettings]] = {
    "development": DevelopmentSettings,
    "production": ProductionSettings,
    "testing": TestingSettings,
}


def get_settings() -> BaseQDepthSettings:
    """
    Build settings for the environment named by QDEPTH_ENV.

    QDEPTH_ENV is read on every call so tests can switch environments with
    monkeypatch.
    """
    env = os.getenv("QDEPTH_ENV", "development")
    return ENVIRONMENTS.get(env, DevelopmentSettings)()
