"""
Monitoring module for qdepth: Prometheus counters written to a textfile.
"""

from qdepth.monitoring.metrics import (
    REGISTRY,
    record_oracle_nodes,
    record_qdepth,
    record_scan_cell,
    track_command,
    write_metrics,
)

__all__ = [
    "REGISTRY",
    "record_qdepth",
    "record_oracle_nodes",
    "record_scan_cell",
    "track_command",
    "write_metrics",
]
