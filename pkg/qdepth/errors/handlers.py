"""
Conversion of exceptions into error responses and exit codes.

The CLI calls ``handle_error`` for anything that escapes a command. The
response is written as one JSON line to stderr; stdout is left untouched.

Limitations:
- Error response structure is fixed; customization requires code changes
"""

import logging
import sys
import traceback
from typing import List, Optional, TextIO

from pydantic import ValidationError as PydanticValidationError

from qdepth.errors.exceptions import ExitCode, QDepthError
from qdepth.logging import Logger
from qdepth.schemas import ErrorInfo, ErrorResponse, ResponseMetadata


def create_error_response(
    exit_code: int,
    message: str,
    code: str = "ERROR",
    errors: Optional[List[ErrorInfo]] = None,
    metadata: Optional[ResponseMetadata] = None,
) -> ErrorResponse:
    """
    Create a standardized error response.

    Args:
        exit_code: Process exit code
        message: Error message
        code: Error code identifier
        errors: Detailed error information list
        metadata: Additional metadata for the response

    Returns:
        Standardized error response
    """
    return ErrorResponse(
        success=False,
        message=message,
        exit_code=exit_code,
        errors=errors or [ErrorInfo(code=code, message=message)],
        metadata=metadata or ResponseMetadata(),
    )


def _validation_errors(exc: PydanticValidationError) -> List[ErrorInfo]:
    return [
        ErrorInfo(
            code="CONFIG_ERROR",
            message=error.get("msg", "Validation error"),
            field=".".join(str(item) for item in error.get("loc", [])),
        )
        for error in exc.errors()
    ]


def error_response_for(exc: BaseException) -> ErrorResponse:
    """Map any exception to its error response."""
    if isinstance(exc, QDepthError):
        return create_error_response(
            exit_code=exc.exit_code,
            message=exc.message,
            code=exc.code,
            errors=[
                ErrorInfo(code=exc.code, message=exc.message, details=exc.details or None)
            ],
        )
    if isinstance(exc, PydanticValidationError):
        return create_error_response(
            exit_code=ExitCode.PARSE,
            message="Invalid configuration",
            code="CONFIG_ERROR",
            errors=_validation_errors(exc),
        )
    return create_error_response(
        exit_code=ExitCode.FAILURE,
        message="Internal error",
        code="INTERNAL_ERROR",
        errors=[ErrorInfo(code="INTERNAL_ERROR", message=str(exc) or type(exc).__name__)],
    )


def handle_error(
    exc: BaseException,
    logger: Optional[Logger] = None,
    stream: Optional[TextIO] = None,
) -> int:
    """
    Log an exception, write its error response to ``stream`` and return the exit code.

    Args:
        exc: The exception to handle
        logger: Optional logger; defaults to this module's logger
        stream: Output stream, stderr by default

    Returns:
        The process exit code
    """
    log = logger or logging.getLogger(__name__)
    response = error_response_for(exc)

    if isinstance(exc, QDepthError):
        log.info(f"{exc.code}: {exc.message}")
    elif isinstance(exc, PydanticValidationError):
        log.warning(f"Invalid configuration: {exc}")
    else:
        log.error(
            f"Unhandled exception: {exc}\n"
            f"{''.join(traceback.format_exception(type(exc), exc, exc.__traceback__))}"
        )

    out = stream if stream is not None else sys.stderr
    out.write(response.model_dump_json() + "\n")
    out.flush()
    return response.exit_code
