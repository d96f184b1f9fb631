"""
Conversion of domain results into output schemas, and the text renderings
(CSV rows, the selftest table) the CLI prints.
"""

import csv
import io
from typing import Any, Dict, Iterable, List, Type

from pydantic import BaseModel

from qdepth.families import CISymmetryReport, EConjectureCell, VeroneseResult
from qdepth.ideals import MonomialIdeal, PolarizationResult
from qdepth.invariants import BetaTable, Blocker, QDepthReport
from qdepth.oracle import SdepthResult
from qdepth.poset import AlphaVector, mask_to_indices
from qdepth.schemas import (
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

CSV_HEADER = ("m", "q", "t", "n", "E", "holds", "proof_status")

# Command name -> schema of what it prints
SCHEMAS: Dict[str, Type[BaseModel]] = {
    "qdepth": QDepthReportSchema,
    "sdepth": SdepthReportSchema,
    "alpha": AlphaSchema,
    "beta": BetaSchema,
    "polarize": PolarizationSchema,
    "veronese": VeroneseSchema,
    "scan-E": ECellSchema,
    "ci-symmetry": CISymmetrySchema,
    "selftest": SelftestSchema,
}


def blocker_schema(blocker: Blocker) -> BlockerSchema:
    return BlockerSchema(d=blocker.d, k=blocker.k, value=blocker.value)


def qdepth_schema(report: QDepthReport, module: str) -> QDepthReportSchema:
    return QDepthReportSchema(
        module=module,
        value=report.value,
        n_effective=report.n_effective,
        n_added=report.n_added,
        witness_d=report.witness.d,
        witness=list(report.witness.entries),
        blocker=blocker_schema(report.blocker) if report.blocker else None,
        alpha=list(report.alpha.counts),
    )


def sdepth_schema(result: SdepthResult, module: str) -> SdepthReportSchema:
    return SdepthReportSchema(
        module=module,
        value=result.value,
        n_effective=result.partition.poset.n,
        n_added=result.n_added,
        partition=[
            IntervalSchema(
                lower=mask_to_indices(iv.lower), upper=mask_to_indices(iv.upper)
            )
            for iv in result.partition.intervals
        ],
        nodes=result.nodes,
    )


def alpha_schema(
    alpha: AlphaVector, module: str, method: str, n_added: int = 0
) -> AlphaSchema:
    return AlphaSchema(
        module=module, n=alpha.n, n_added=n_added, method=method, counts=list(alpha)
    )


def beta_schema(table: BetaTable) -> BetaSchema:
    blocker = table.first_negative
    return BetaSchema(
        d=table.d,
        alpha=list(table.source_alpha),
        entries=list(table.entries),
        nonnegative=table.is_nonnegative,
        blocker=blocker_schema(blocker) if blocker else None,
    )


def polarization_schema(
    ideal: MonomialIdeal, result: PolarizationResult
) -> PolarizationSchema:
    return PolarizationSchema(
        ideal=str(ideal),
        n=ideal.n,
        polarized=str(result.polarized),
        n_polarized=result.polarized.n,
        added=result.added,
        var_map=[
            ReplicaSchema(variable=i, replica=j, index=index)
            for (i, j), index in sorted(result.var_map.items())
        ],
    )


def veronese_schema(result: VeroneseResult) -> VeroneseSchema:
    return VeroneseSchema(
        n=result.spec.n,
        m=result.spec.m,
        q=result.spec.q,
        value=result.value,
        quotient_value=result.quotient_value,
        upper_bound=result.upper_bound,
        in_theorem_region=result.in_theorem_region,
        method=result.method,
    )


def cell_schema(cell: EConjectureCell) -> ECellSchema:
    return ECellSchema(
        m=cell.m,
        q=cell.q,
        t=cell.t,
        n=cell.n,
        E=cell.E_value,
        holds=cell.holds,
        proof_status=cell.proof_status.value,
    )


def cell_list_schema(cells: Iterable[EConjectureCell]) -> ECellListSchema:
    rows = [cell_schema(c) for c in cells]
    return ECellListSchema(cells=rows, violations=sum(1 for r in rows if not r.holds))


def csv_header() -> str:
    return _csv_line(CSV_HEADER)


def csv_row(cell: EConjectureCell) -> str:
    return _csv_line(
        (
            str(cell.m),
            str(cell.q),
            str(cell.t),
            str(cell.n),
            str(cell.E_value),
            "true" if cell.holds else "false",
            cell.proof_status.value,
        )
    )


def _csv_line(fields: Iterable[str]) -> str:
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerow(fields)
    return buffer.getvalue()


def ci_symmetry_schema(report: CISymmetryReport) -> CISymmetrySchema:
    return CISymmetrySchema(
        n=report.n,
        degs=list(report.degs),
        checks=[
            SymmetryCheckSchema(
                d=check.d,
                label=check.label,
                entries=list(check.entries),
                violations=[
                    SymmetryViolationSchema(k=k, sum=total)
                    for k, total in check.violations
                ],
                symmetric=check.symmetric,
            )
            for check in report.checks
        ],
        endpoint=report.endpoint,
        support_endpoint=report.support_endpoint,
    )


def _plain(value: Any) -> Any:
    """Details as JSON-safe values; integers become decimal strings."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    return str(value)


def selftest_schema(result: Dict[str, Any]) -> SelftestSchema:
    return SelftestSchema(
        status=str(result["status"].value),
        passed=result["passed"],
        failed=result["failed"],
        checks=[
            SelftestCheckSchema(
                name=check["name"],
                status=str(check["status"].value),
                tags=list(check["tags"]),
                details=_plain(check["details"]),
            )
            for check in result["checks"]
        ],
    )


def selftest_table(result: Dict[str, Any]) -> str:
    """Fixed-width pass/fail table, one row per check, then a summary line."""
    rows: List[List[str]] = [["CHECK", "STATUS", "TAGS", "DETAILS"]]
    for check in result["checks"]:
        details = check["details"]
        summary = details.get("error") or ", ".join(
            f"{k}={v}" for k, v in sorted(details.items())
        )
        rows.append(
            [
                check["name"],
                check["status"].value.upper(),
                ",".join(check["tags"]),
                str(summary),
            ]
        )
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(row[:3], widths))
        + "  "
        + row[3]
        for row in rows
    ]
    lines.append(
        f"{result['status'].value.upper()}: "
        f"{result['passed']} passed, {result['failed']} failed"
    )
    return "\n".join(line.rstrip() for line in lines) + "\n"
