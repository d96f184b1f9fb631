"""
Prometheus metrics for qdepth runs.

Metrics live in a dedicated CollectorRegistry and are written to a textfile
(node-exporter textfile collector format) at the end of a CLI run. Nothing is
served over the network and nothing is written to stdout.

Limitations:
- Counters are per process; worker processes of a parallel scan report
  nothing back except through the cells they return
- No push gateway support
"""

import time
from contextlib import contextmanager
from typing import Iterator, Optional

from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

REGISTRY = CollectorRegistry()

COMMAND_COUNT = Counter(
    "qdepth_commands_total",
    "Total count of CLI commands run",
    ["command", "status"],
    registry=REGISTRY,
)

COMMAND_LATENCY = Histogram(
    "qdepth_command_duration_seconds",
    "CLI command duration in seconds",
    ["command"],
    buckets=[0.01, 0.05, 0.1, 0.5, 1, 5, 10, 30, 60, 300],
    registry=REGISTRY,
)

QDEPTH_COMPUTATIONS = Counter(
    "qdepth_computations_total",
    "Total count of quasi depth computations",
    registry=REGISTRY,
)

ORACLE_NODES = Counter(
    "qdepth_oracle_search_nodes_total",
    "Search nodes expanded by the Stanley depth oracle",
    registry=REGISTRY,
)

SCAN_CELLS = Counter(
    "qdepth_scan_cells_total",
    "Conjecture scan cells evaluated",
    ["proof_status"],
    registry=REGISTRY,
)

SCAN_VIOLATIONS = Counter(
    "qdepth_scan_violations_total",
    "Conjecture scan cells with a negative value",
    registry=REGISTRY,
)


def record_qdepth() -> None:
    QDEPTH_COMPUTATIONS.inc()


def record_oracle_nodes(count: int) -> None:
    if count:
        ORACLE_NODES.inc(count)


def record_scan_cell(proof_status: str, holds: bool) -> None:
    SCAN_CELLS.labels(proof_status=proof_status).inc()
    if not holds:
        SCAN_VIOLATIONS.inc()


@contextmanager
def track_command(command: str) -> Iterator[None]:
    """
    Count a command and time it; the status label is ``ok`` or the error class.
    """
    start_time = time.perf_counter()
    status = "ok"
    try:
        yield
    except BaseException as exc:
        status = type(exc).__name__
        raise
    finally:
        COMMAND_COUNT.labels(command=command, status=status).inc()
        COMMAND_LATENCY.labels(command=command).observe(time.perf_counter() - start_time)


def write_metrics(path: Optional[str]) -> bool:
    """
    Write the registry to ``path`` if one is given.

    Returns:
        True when a file was written
    """
    if not path:
        return False
    write_to_textfile(path, REGISTRY)
    return True
