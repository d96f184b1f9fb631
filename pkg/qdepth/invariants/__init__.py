"""
β-tables, quasi depth and the structural checks built on them.
"""

from qdepth.invariants.beta import (
    BetaTable,
    Blocker,
    alpha_from_beta,
    beta_closed,
    beta_table,
    iter_beta,
    verify_roundtrip,
)
from qdepth.invariants.properties import (
    CollapseDiagnostic,
    check_colon_invariance,
    check_colon_sequence_bound,
    check_disjoint_union_bound,
    check_extension_shift,
    check_multiplication_invariance,
    check_regular_ideal_bound,
    check_regular_sandwich,
    check_short_exact_bound,
    collapse_condition,
    is_regular,
    lemma_kkk_table,
)
from qdepth.invariants.quasi import (
    QDepthReport,
    qdepth,
    qdepth_alpha,
    qdepth_ideal,
    qdepth_lower_bounds,
    qdepth_poset,
    qdepth_quotient,
    qdepth_squarefree,
)

__all__ = [
    "BetaTable",
    "Blocker",
    "QDepthReport",
    "CollapseDiagnostic",
    "beta_table",
    "beta_closed",
    "iter_beta",
    "alpha_from_beta",
    "verify_roundtrip",
    "qdepth",
    "qdepth_alpha",
    "qdepth_poset",
    "qdepth_squarefree",
    "qdepth_quotient",
    "qdepth_ideal",
    "qdepth_lower_bounds",
    "check_extension_shift",
    "check_regular_sandwich",
    "check_regular_ideal_bound",
    "check_colon_invariance",
    "check_multiplication_invariance",
    "check_disjoint_union_bound",
    "check_short_exact_bound",
    "check_colon_sequence_bound",
    "is_regular",
    "lemma_kkk_table",
    "collapse_condition",
]
