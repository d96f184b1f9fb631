"""
Characteristic posets, intervals and α-vectors.
"""

from qdepth.poset.alpha import (
    AlphaMode,
    AlphaVector,
    alpha_by_inclusion_exclusion,
    alpha_ci,
    alpha_quotient_pair,
    alpha_vector,
)
from qdepth.poset.poset import (
    Interval,
    SubsetPoset,
    build_poset,
    indices_to_mask,
    mask_to_indices,
    popcount,
)

__all__ = [
    "SubsetPoset",
    "Interval",
    "AlphaVector",
    "AlphaMode",
    "build_poset",
    "alpha_vector",
    "alpha_by_inclusion_exclusion",
    "alpha_quotient_pair",
    "alpha_ci",
    "popcount",
    "mask_to_indices",
    "indices_to_mask",
]
