"""
Monomials, monomial ideals, the ideal text grammar and polarization.
"""

from qdepth.ideals.grammar import format_ideal, parse_ideal
from qdepth.ideals.ideal import MonomialIdeal, lcm_subset, minimalize
from qdepth.ideals.monomial import Monomial
from qdepth.ideals.polarization import PolarizationResult, polarize, polarize_pair

__all__ = [
    "Monomial",
    "MonomialIdeal",
    "PolarizationResult",
    "minimalize",
    "lcm_subset",
    "parse_ideal",
    "format_ideal",
    "polarize",
    "polarize_pair",
]
