"""
Exception hierarchy for qdepth.

Every error raised by the library derives from QDepthError. A class fixes a
default message, a stable error code and the exit code the CLI reports; the
message and code can be overridden per instance.

Limitations:
- Exit codes are fixed per class; customization requires subclassing
- Details must be JSON serializable (integers are stringified on output)
"""

from enum import IntEnum
from typing import Any, Dict, Optional


class ExitCode(IntEnum):
    """Process exit codes used by the command-line interface."""

    OK = 0
    FAILURE = 1
    PARSE = 2
    DOMAIN = 3
    RESOURCE_CAP = 4


def _stringify_ints(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {key: _stringify_ints(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify_ints(item) for item in obj]
    if isinstance(obj, int) and not isinstance(obj, bool):
        return str(obj)
    return obj


class QDepthError(Exception):
    """
    Base exception for all qdepth errors.

    Attributes:
        message: Human-readable error message
        code: Error code identifier
        exit_code: CLI exit code
        details: Additional error details, integers as decimal strings
    """

    default_message = "An unexpected error occurred"
    default_code = "ERROR"
    exit_code: int = ExitCode.FAILURE

    def __init__(
        self,
        message: Optional[str] = None,
        code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.message = message or self.default_message
        self.code = code or self.default_code
        self.exit_code = int(self.exit_code)
        self.details = _stringify_ints(details or {})
        super().__init__(self.message)


class InvariantViolationError(QDepthError):
    """
    Raised when a proved identity or bound fails on a computed instance.

    This always indicates an implementation bug, never new mathematics.
    """

    default_message = "Invariant violated"
    default_code = "INVARIANT_VIOLATION"


class SelftestFailedError(QDepthError):
    default_message = "Selftest failed"
    default_code = "SELFTEST_FAILED"


class ParseError(QDepthError):
    """
    Raised when ideal text does not match the grammar.

    Attributes:
        position: 0-based character offset of the offending input, if known
    """

    default_message = "Syntax error"
    default_code = "PARSE_ERROR"
    exit_code = ExitCode.PARSE

    def __init__(
        self,
        message: Optional[str] = None,
        position: Optional[int] = None,
        code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.position = position
        message = message or self.default_message
        details = dict(details or {})
        if position is not None:
            details["position"] = position
            message = f"{message} at position {position}"
        super().__init__(message, code, details)


class VariableIndexError(ParseError):
    """Raised when a variable index lies outside 1..n."""

    default_message = "Variable index out of range"
    default_code = "VARIABLE_INDEX"


class DomainError(QDepthError):
    """Raised when an operation's precondition on its mathematical input fails."""

    default_message = "Domain error"
    default_code = "DOMAIN_ERROR"
    exit_code = ExitCode.DOMAIN


class EmptyPosetError(DomainError):
    """Raised for I = J, where the invariants are undefined."""

    default_message = "The characteristic poset is empty (I = J)"
    default_code = "EMPTY_POSET"


class NotSquarefreeError(DomainError):
    default_message = "Ideal is not squarefree"
    default_code = "NOT_SQUAREFREE"


class NotContainedError(DomainError):
    default_message = "I is not contained in J"
    default_code = "NOT_CONTAINED"


class NotRegularError(DomainError):
    default_message = "Monomial is not regular on S/I"
    default_code = "NOT_REGULAR"


class DegreeOverflowError(DomainError):
    default_message = "Sum of generator degrees exceeds n"
    default_code = "DEGREE_OVERFLOW"


class AmbientMismatchError(DomainError):
    default_message = "Ambient variable counts differ"
    default_code = "AMBIENT_MISMATCH"


class IndexOutOfRangeError(DomainError):
    default_message = "Index out of range"
    default_code = "INDEX_OUT_OF_RANGE"


class PreconditionError(DomainError):
    """Raised when numeric arguments fall outside an operation's stated range."""

    default_message = "Precondition failed"
    default_code = "PRECONDITION"


class ResourceCapError(QDepthError):
    """Raised when an input exceeds a configured size cap."""

    default_message = "Resource cap exceeded"
    default_code = "RESOURCE_CAP"
    exit_code = ExitCode.RESOURCE_CAP


class PosetTooLargeError(ResourceCapError):
    default_message = "Poset is too large to enumerate"
    default_code = "POSET_TOO_LARGE"
