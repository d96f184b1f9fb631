"""
Unit tests for the schemas module.

Covers:
- DecimalInt: exact decimal-string serialization and parsing
- Report schemas: JSON field names and optional fields
- Error response defaults and metadata
"""
import json

from qdepth import __version__
from qdepth.schemas import (
    AlphaSchema,
    BetaSchema,
    BlockerSchema,
    ECellSchema,
    ErrorInfo,
    ErrorResponse,
    ResponseMetadata,
    VeroneseSchema,
)


def test_decimal_int_serializes_as_string():
    schema = AlphaSchema(module="quotient", n=4, method="enumeration", counts=[1, 4, 5, 1, 0])
    data = json.loads(schema.model_dump_json())
    assert data["n"] == "4"
    assert data["n_added"] == "0"
    assert data["counts"] == ["1", "4", "5", "1", "0"]


def test_decimal_int_keeps_large_values_exact():
    big = 3**90
    schema = ECellSchema(m=2, q=9, t=5, n=29, E=-big, holds=False, proof_status="open")
    assert json.loads(schema.model_dump_json())["E"] == str(-big)


def test_decimal_int_accepts_strings():
    blocker = BlockerSchema.model_validate({"d": "3", "k": "3", "value": "-1"})
    assert blocker.value == -1


def test_beta_schema_blocker_optional():
    schema = BetaSchema(d=2, alpha=[1, 4, 5, 1, 0], entries=[1, 2, 2], nonnegative=True)
    data = json.loads(schema.model_dump_json())
    assert data["blocker"] is None
    assert data["nonnegative"] is True


def test_json_schema_declares_strings_for_integers():
    schema = VeroneseSchema.model_json_schema()
    assert schema["properties"]["value"]["type"] == "string"
    assert schema["properties"]["in_theorem_region"]["type"] == "boolean"


def test_error_response_defaults():
    response = ErrorResponse(message="bad", exit_code=2)
    assert response.success is False
    assert response.errors == []
    assert response.metadata.version == __version__


def test_error_info_optional_fields():
    info = ErrorInfo(code="PARSE_ERROR", message="x")
    assert info.field is None
    assert info.details is None


def test_metadata_timestamp_is_utc():
    assert ResponseMetadata().timestamp.utcoffset().total_seconds() == 0
