"""
Development environment specific settings.
"""

from .base import BaseQDepthSettings


class DevelopmentSettings(BaseQDepthSettings):
    """
    Settings class for interactive use.

    Inherits every default from BaseQDepthSettings; logging stays at the base
    level so that command output is not interleaved with progress records.
    """
