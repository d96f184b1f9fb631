"""
Production environment specific settings.

Used for long batch scans: logs are structured so that they can be collected.
"""

from .base import BaseQDepthSettings


class ProductionSettings(BaseQDepthSettings):
    """
    Settings class for unattended runs.

    Attributes:
        DEBUG: Always False
        LOG_LEVEL: INFO, so scan progress is recorded
        LOG_JSON_FORMAT: Always True
    """

    DEBUG: bool = False
    LOG_LEVEL: str = "INFO"
    LOG_JSON_FORMAT: bool = True
