"""
Metadata attached to error responses.

Command output on stdout carries no metadata so that it stays byte-identical
across runs; error responses go to stderr and may carry a timestamp.
"""

from datetime import datetime, timezone

from pydantic import BaseModel, Field

from qdepth import __version__


class ResponseMetadata(BaseModel):
    """
    Attributes:
        timestamp: When the response was created (UTC)
        version: qdepth version
    """

    timestamp: datetime = Field(
        default_factory=lambda: datetime.now(timezone.utc),
        description="Timestamp of when the response was created",
    )
    version: str = Field(default=__version__, description="qdepth version")
