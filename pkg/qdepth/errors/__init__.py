"""
Error handling module for qdepth.

One exception hierarchy rooted at QDepthError; every class carries an error
code and the CLI exit code (0 ok, 1 failure, 2 parse, 3 domain, 4 resource cap).

Limitations:
- Error response structure is fixed; customization requires code changes.
- No localization.
"""

from qdepth.errors.exceptions import (
    AmbientMismatchError,
    DegreeOverflowError,
    DomainError,
    EmptyPosetError,
    ExitCode,
    IndexOutOfRangeError,
    InvariantViolationError,
    NotContainedError,
    NotRegularError,
    NotSquarefreeError,
    ParseError,
    PosetTooLargeError,
    PreconditionError,
    QDepthError,
    ResourceCapError,
    SelftestFailedError,
    VariableIndexError,
)

__all__ = [
    "ExitCode",
    "QDepthError",
    "InvariantViolationError",
    "SelftestFailedError",
    "ParseError",
    "VariableIndexError",
    "DomainError",
    "EmptyPosetError",
    "NotSquarefreeError",
    "NotContainedError",
    "NotRegularError",
    "DegreeOverflowError",
    "AmbientMismatchError",
    "IndexOutOfRangeError",
    "PreconditionError",
    "ResourceCapError",
    "PosetTooLargeError",
]
