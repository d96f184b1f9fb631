"""
qdepth - quasi depth of monomial ideals.

Exact computation of α-vectors, β-tables and quasi depth for quotients of
monomial ideals (through polarization), an exhaustive Stanley depth oracle for
small cases, and scanners for the squarefree Veronese and complete intersection
families.

Usage:
    from qdepth.ideals import parse_ideal
    from qdepth.invariants import qdepth_quotient

    report = qdepth_quotient(parse_ideal("x1^2, x1*x2^2", n=2))
    report.value  # 0
"""

__version__ = "0.1.0"
__author__ = "qdepth contributors"
__license__ = "MIT"
__min_python_version__ = "3.9"

# The tuple format is (major, minor, patch)
__version_info__ = (0, 1, 0)
