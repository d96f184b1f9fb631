"""
Special families: squarefree Veronese ideals, the E-conjecture machinery and
squarefree complete intersections.
"""

from qdepth.families.ci import (
    CISymmetryReport,
    SymmetryCheck,
    ci_qdepth,
    ci_qdepth_check,
    ci_symmetry,
    complete_intersection,
)
from qdepth.families.econj import (
    E,
    E_falling_factorial,
    E_falling_factorial_reversed,
    E_rec_n,
    E_rec_q,
    E_t1_closed,
    EConjectureCell,
    ProofStatus,
    RatioBounds,
    alpha_ratio,
    alpha_ratio_bounds,
    boundary_n,
    classify_cell,
    conjecture_scan,
    evaluate_cell,
    gamma,
)
from qdepth.families.generators import (
    random_complete_intersection,
    random_monomial_ideal,
    random_quotient_pair,
    random_squarefree_ideal,
)
from qdepth.families.veronese import (
    VeroneseResult,
    VeroneseSpec,
    alpha_veronese,
    in_theorem_region,
    qdepth_veronese,
    veronese_critical_betas,
    veronese_ideal,
    veronese_region_scan,
)

__all__ = [
    "VeroneseSpec",
    "VeroneseResult",
    "veronese_ideal",
    "alpha_veronese",
    "in_theorem_region",
    "qdepth_veronese",
    "veronese_region_scan",
    "veronese_critical_betas",
    "E",
    "E_rec_q",
    "E_rec_n",
    "E_falling_factorial",
    "E_falling_factorial_reversed",
    "E_t1_closed",
    "gamma",
    "alpha_ratio",
    "alpha_ratio_bounds",
    "RatioBounds",
    "boundary_n",
    "ProofStatus",
    "EConjectureCell",
    "classify_cell",
    "evaluate_cell",
    "conjecture_scan",
    "CISymmetryReport",
    "SymmetryCheck",
    "complete_intersection",
    "ci_symmetry",
    "ci_qdepth",
    "ci_qdepth_check",
    "random_complete_intersection",
    "random_squarefree_ideal",
    "random_monomial_ideal",
    "random_quotient_pair",
]
