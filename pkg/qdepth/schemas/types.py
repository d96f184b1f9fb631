"""
Shared field types.

Integers in every report are serialized as exact decimal strings: β entries
and Veronese scan values exceed 64 bits and must survive JSON consumers that
read numbers as doubles.
"""

from typing import Any

from pydantic import BeforeValidator, PlainSerializer, WithJsonSchema
from typing_extensions import Annotated


def _to_int(value: Any) -> Any:
    if isinstance(value, str):
        return int(value)
    return value


DecimalInt = Annotated[
    int,
    BeforeValidator(_to_int),
    PlainSerializer(str, return_type=str, when_used="always"),
    WithJsonSchema({"type": "string", "pattern": "^-?[0-9]+$"}),
]
