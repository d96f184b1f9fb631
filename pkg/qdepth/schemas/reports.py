"""
Output schemas for every CLI command.

Field names are the published JSON contract; ``qdepth schema <command>``
prints the JSON schema of the matching model.
"""

from typing import List, Optional

from pydantic import BaseModel, Field

from qdepth.schemas.types import DecimalInt


class BlockerSchema(BaseModel):
    d: DecimalInt = Field(..., description="Depth parameter of the failing table")
    k: DecimalInt = Field(..., description="Least index with a negative entry")
    value: DecimalInt = Field(..., description="The negative entry")


class AlphaSchema(BaseModel):
    module: str = Field(..., description="quotient, ideal or pair")
    n: DecimalInt = Field(..., description="Ambient size the counts live over")
    n_added: DecimalInt = Field(default=0, description="Polarization variables")
    method: str = Field(..., description="enumeration or inclusion-exclusion")
    counts: List[DecimalInt] = Field(..., description="α_0..α_n")


class BetaSchema(BaseModel):
    d: DecimalInt
    alpha: List[DecimalInt] = Field(..., description="Source α-vector")
    entries: List[DecimalInt] = Field(..., description="β_0^d..β_d^d")
    nonnegative: bool
    blocker: Optional[BlockerSchema] = None


class QDepthReportSchema(BaseModel):
    module: str = Field(..., description="quotient, ideal or pair")
    value: DecimalInt = Field(..., description="Quasi depth")
    n_effective: DecimalInt = Field(..., description="Ambient size after polarization")
    n_added: DecimalInt = Field(..., description="Polarization variables N")
    witness_d: DecimalInt = Field(..., description="d of the witness table (value + N)")
    witness: List[DecimalInt] = Field(..., description="β entries at witness_d")
    blocker: Optional[BlockerSchema] = Field(
        default=None, description="Least negative entry at witness_d + 1"
    )
    alpha: List[DecimalInt] = Field(..., description="α of the polarized quotient")


class IntervalSchema(BaseModel):
    lower: List[int] = Field(..., description="Sorted 1-based indices of C")
    upper: List[int] = Field(..., description="Sorted 1-based indices of D")


class SdepthReportSchema(BaseModel):
    module: str
    value: DecimalInt = Field(..., description="Stanley depth")
    n_effective: DecimalInt
    n_added: DecimalInt
    partition: List[IntervalSchema] = Field(..., description="One optimal partition")
    nodes: DecimalInt = Field(..., description="Search nodes expanded")


class ReplicaSchema(BaseModel):
    variable: int = Field(..., description="Original variable index i")
    replica: int = Field(..., description="Replica number j >= 2")
    index: int = Field(..., description="New variable index")


class PolarizationSchema(BaseModel):
    ideal: str
    n: DecimalInt
    polarized: str
    n_polarized: DecimalInt
    added: DecimalInt
    var_map: List[ReplicaSchema]


class VeroneseSchema(BaseModel):
    n: DecimalInt
    m: DecimalInt
    q: DecimalInt
    value: DecimalInt = Field(..., description="qdepth(J_{n,m})")
    quotient_value: DecimalInt = Field(..., description="qdepth(S/J_{n,m})")
    upper_bound: DecimalInt = Field(..., description="m + q")
    in_theorem_region: bool
    method: str


class ECellSchema(BaseModel):
    m: DecimalInt
    q: DecimalInt
    t: DecimalInt
    n: DecimalInt
    E: DecimalInt
    holds: bool
    proof_status: str


class ECellListSchema(BaseModel):
    cells: List[ECellSchema]
    violations: DecimalInt


class SymmetryViolationSchema(BaseModel):
    k: DecimalInt
    sum: DecimalInt = Field(..., description="β_k^d + β_{d-k}^d")


class SymmetryCheckSchema(BaseModel):
    d: DecimalInt
    label: str = Field(..., description="n+m-1, n-m+1 or override")
    entries: List[DecimalInt]
    violations: List[SymmetryViolationSchema]
    symmetric: bool


class CISymmetrySchema(BaseModel):
    n: DecimalInt
    degs: List[DecimalInt]
    checks: List[SymmetryCheckSchema]
    endpoint: DecimalInt = Field(..., description="β_{n-m+1}^{n-m+1}(S/I)")
    support_endpoint: DecimalInt = Field(
        ..., description="The same entry over the variables the generators use"
    )


class SelftestCheckSchema(BaseModel):
    name: str
    status: str
    tags: List[str]
    details: dict = Field(default_factory=dict)


class SelftestSchema(BaseModel):
    status: str
    passed: DecimalInt
    failed: DecimalInt
    checks: List[SelftestCheckSchema]
