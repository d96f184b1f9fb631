"""
Exhaustive Stanley depth oracle for small squarefree quotients.
"""

from qdepth.oracle.partition import IntervalPartition
from qdepth.oracle.search import SdepthResult, sdepth, sdepth_poset

__all__ = ["IntervalPartition", "SdepthResult", "sdepth", "sdepth_poset"]
