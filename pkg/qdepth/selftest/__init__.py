"""
Selftest: golden values, randomized property suites and grid scans.
"""

from qdepth.selftest.checks import build_registry, run_selftest
from qdepth.selftest.registry import SelftestCheck, SelftestRegistry, SelftestStatus

__all__ = [
    "SelftestCheck",
    "SelftestRegistry",
    "SelftestStatus",
    "build_registry",
    "run_selftest",
]
