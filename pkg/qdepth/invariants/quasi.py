"""
Quasi depth.

For a squarefree quotient J/I:

    qdepth(J/I) = max{d : β_k^d(J/I) >= 0 for all 0 <= k <= d}

For general monomial ideals the pair is polarized against its joint lcm and
the number N of added variables is subtracted. The scan covers every d in
0..n and keeps the largest feasible one.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from qdepth.errors import (
    AmbientMismatchError,
    EmptyPosetError,
    InvariantViolationError,
    NotContainedError,
    NotSquarefreeError,
)
from qdepth.ideals import MonomialIdeal, polarize_pair
from qdepth.invariants.beta import BetaTable, Blocker, beta_table, iter_beta
from qdepth.monitoring import record_qdepth
from qdepth.poset import AlphaVector, SubsetPoset, alpha_quotient_pair, alpha_vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QDepthReport:
    """
    Attributes:
        value: The quasi depth (after subtracting n_added)
        n_effective: Ambient size the β-tables live over (post-polarization)
        n_added: N, the number of polarization variables
        witness: β-table at the polarized d = value + n_added, all entries >= 0
        blocker: Least negative entry of the table at the next d; None when
            value + n_added = n_effective
        alpha: α-vector of the (polarized) quotient
    """

    value: int
    n_effective: int
    n_added: int
    witness: BetaTable
    blocker: Optional[Blocker]
    alpha: AlphaVector


def _first_negative(alpha: AlphaVector, d: int) -> Optional[Blocker]:
    for k, b in enumerate(iter_beta(alpha, d)):
        if b < 0:
            return Blocker(d=d, k=k, value=b)
    return None


def qdepth_alpha(alpha: AlphaVector, n_added: int = 0) -> QDepthReport:
    """
    Quasi depth of any family of subsets with the given α-vector.

    Raises:
        EmptyPosetError: when every α_k is 0
        InvariantViolationError: when min{k: α_k>0} <= value <= max{k: α_k>0} fails
    """
    if alpha.is_zero:
        raise EmptyPosetError()

    best = 0
    blockers: Dict[int, Blocker] = {}
    for d in range(alpha.n + 1):
        blocker = _first_negative(alpha, d)
        if blocker is None:
            best = d
        else:
            blockers[d] = blocker

    if not alpha.min_rank <= best <= alpha.max_rank:
        raise InvariantViolationError(
            "qdepth outside [min{k: α_k>0}, max{k: α_k>0}]",
            details={
                "value": best,
                "min_rank": alpha.min_rank,
                "max_rank": alpha.max_rank,
                "alpha": list(alpha.counts),
            },
        )

    witness = beta_table(alpha, best)
    blocker = blockers.get(best + 1) if best < alpha.n else None
    record_qdepth()
    logger.debug(
        "qdepth scan finished",
        extra={"n": alpha.n, "value": best, "n_added": n_added},
    )
    return QDepthReport(
        value=best - n_added,
        n_effective=alpha.n,
        n_added=n_added,
        witness=witness,
        blocker=blocker,
        alpha=alpha,
    )


def qdepth_poset(poset: SubsetPoset) -> QDepthReport:
    """Quasi depth of an arbitrary subset family; the invariant depends only on α."""
    return qdepth_alpha(alpha_vector(poset))


def qdepth_squarefree(J: MonomialIdeal, I: MonomialIdeal) -> QDepthReport:
    """
    Quasi depth of J/I for squarefree I ⊆ J.

    α(J/I) comes from inclusion and exclusion over the generators, which agrees
    with counting the members of P_{J/I} and needs no 2^n enumeration.
    """
    if not (J.squarefree and I.squarefree):
        raise NotSquarefreeError("qdepth_squarefree needs squarefree ideals")
    if J == I:
        raise EmptyPosetError()
    return qdepth_alpha(alpha_quotient_pair(J, I))


def qdepth_lower_bounds(ideal: MonomialIdeal) -> Tuple[int, int]:
    """
    (n - m, max{1, n - floor(m/2)}): lower bounds for qdepth(S/I) and qdepth(I)
    when I is minimally generated by m monomials.
    """
    n, m = ideal.n, ideal.m
    return n - m, max(1, n - m // 2)


def _check_lower_bounds(J: MonomialIdeal, I: MonomialIdeal, value: int) -> None:
    if J.is_unit and not I.is_unit:
        bound, which = qdepth_lower_bounds(I)[0], "S/I"
        ideal = I
    elif I.is_zero and not J.is_zero:
        bound, which = qdepth_lower_bounds(J)[1], "I"
        ideal = J
    else:
        return
    if value < bound:
        raise InvariantViolationError(
            f"qdepth({which}) = {value} is below the lower bound {bound}",
            details={"ideal": str(ideal), "value": value, "bound": bound},
        )


def qdepth(J: MonomialIdeal, I: MonomialIdeal) -> QDepthReport:
    """
    Quasi depth of J/I for monomial ideals I ⊊ J.

    J = S gives qdepth(S/I); I = 0 gives qdepth(J).

    Raises:
        AmbientMismatchError: when J and I live in different rings
        NotContainedError: when I is not contained in J
        EmptyPosetError: when I = J
    """
    if J.n != I.n:
        raise AmbientMismatchError(
            f"J has {J.n} variables, I has {I.n}", details={"J": J.n, "I": I.n}
        )
    if not I.is_subideal_of(J):
        raise NotContainedError()
    if I == J:
        raise EmptyPosetError()

    Jp, Ip = polarize_pair(J, I)
    report = qdepth_alpha(
        alpha_quotient_pair(Jp.polarized, Ip.polarized), n_added=Jp.added
    )
    _check_lower_bounds(J, I, report.value)
    return report


def qdepth_quotient(ideal: MonomialIdeal) -> QDepthReport:
    """qdepth(S/I)."""
    return qdepth(MonomialIdeal.unit(ideal.n), ideal)


def qdepth_ideal(ideal: MonomialIdeal) -> QDepthReport:
    """qdepth(I), the ideal viewed as the module I/0."""
    return qdepth(ideal, MonomialIdeal.zero(ideal.n))
