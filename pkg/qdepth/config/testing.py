"""
Testing environment specific settings.

Randomized selftest suites are scaled down so that a test run stays short.
"""

from .base import BaseQDepthSettings


class TestingSettings(BaseQDepthSettings):
    """
    Settings class for the test suite.

    Attributes:
        DEBUG: Set to True for detailed test output
        SELFTEST_SCALE: Randomized selftest suites run a tenth of their cases
    """

    DEBUG: bool = True
    SELFTEST_SCALE: float = 0.1
