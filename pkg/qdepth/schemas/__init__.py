"""
Pydantic schemas for command output and error responses.

Limitations:
- Integers are always serialized as decimal strings
- Output carries no metadata; only error responses are timestamped
"""

from qdepth.schemas.error import ErrorInfo, ErrorResponse
from qdepth.schemas.metadata import ResponseMetadata
from qdepth.schemas.reports import (
    AlphaSchema,
    BetaSchema,
    BlockerSchema,
    CISymmetrySchema,
    ECellListSchema,
    ECellSchema,
    IntervalSchema,
    PolarizationSchema,
    QDepthReportSchema,
    ReplicaSchema,
    SdepthReportSchema,
    SelftestCheckSchema,
    SelftestSchema,
    SymmetryCheckSchema,
    SymmetryViolationSchema,
    VeroneseSchema,
)
from qdepth.schemas.types import DecimalInt

__all__ = [
    "DecimalInt",
    "ResponseMetadata",
    "ErrorInfo",
    "ErrorResponse",
    "AlphaSchema",
    "BetaSchema",
    "BlockerSchema",
    "QDepthReportSchema",
    "IntervalSchema",
    "SdepthReportSchema",
    "ReplicaSchema",
    "PolarizationSchema",
    "VeroneseSchema",
    "ECellSchema",
    "ECellListSchema",
    "SymmetryViolationSchema",
    "SymmetryCheckSchema",
    "CISymmetrySchema",
    "SelftestCheckSchema",
    "SelftestSchema",
]
