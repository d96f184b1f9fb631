"""
Error response schemas, written as JSON to stderr by the CLI.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from qdepth.schemas.metadata import ResponseMetadata


class ErrorInfo(BaseModel):
    """
    Detailed error information.

    Attributes:
        code: Error code identifier
        message: Human-readable error message
        field: Optional input field or argument that caused the error
        details: Optional additional error details
    """

    code: str = Field(..., description="Error code identifier")
    message: str = Field(..., description="Human-readable error message")
    field: Optional[str] = Field(
        default=None, description="Input that caused the error"
    )
    details: Optional[Dict[str, Any]] = Field(
        default=None, description="Additional error details"
    )


class ErrorResponse(BaseModel):
    """
    Envelope for errors.

    Attributes:
        success: Always false
        message: Error message
        exit_code: Process exit code the CLI returns
        errors: List of error details
        metadata: Timestamp and version
    """

    success: bool = Field(default=False, description="Always false for errors")
    message: str = Field(..., description="Error message")
    exit_code: int = Field(..., description="Process exit code")
    errors: List[ErrorInfo] = Field(
        default_factory=list, description="List of error details"
    )
    metadata: ResponseMetadata = Field(default_factory=ResponseMetadata)
