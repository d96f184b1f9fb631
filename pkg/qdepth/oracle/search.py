"""
Exact Stanley depth of small squarefree quotients.

sdepth(P) is the largest d for which P has an interval partition with every
upper endpoint of size at least d. Feasibility at level d is decided by a
backtracking search over a normal form of such partitions:

- the least uncovered member A (by cardinality, then mask) is always a lower
  endpoint, since any interval covering it has its lower endpoint inside A;
- an interval [C, D] with |C| < d may be taken with |D| = d exactly, because
  [C, D] = [C, D \\ {x}] ⊔ [C ∪ {x}, D] keeps both upper sizes >= d;
- once |A| >= d, the remaining members are covered by singletons.

In this normal form the number of intervals with |C| = k < d is forced to be
β_k^d, which gives a counting prune. A failed uncovered set is memoized; the
covered set determines the interval counts, so it is a complete key.

Cost is exponential in the worst case; the ambient size is capped by
QDEPTH_ORACLE_MAX_N.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

from qdepth.config import get_settings
from qdepth.errors import (
    AmbientMismatchError,
    EmptyPosetError,
    InvariantViolationError,
    NotContainedError,
    PosetTooLargeError,
)
from qdepth.ideals import MonomialIdeal, polarize_pair
from qdepth.invariants import beta_table
from qdepth.monitoring import record_oracle_nodes
from qdepth.oracle.partition import IntervalPartition
from qdepth.poset import Interval, SubsetPoset, alpha_vector, build_poset, popcount

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SdepthResult:
    """
    Attributes:
        value: Stanley depth (after subtracting n_added)
        partition: One optimal interval partition of the (polarized) poset
        n_added: Polarization variables subtracted
        nodes: Search nodes expanded over all levels tried
    """

    value: int
    partition: IntervalPartition
    n_added: int = 0
    nodes: int = 0


class _LevelSearch:
    """Feasibility of level d for one poset."""

    def __init__(self, poset: SubsetPoset, d: int, targets: Tuple[int, ...]):
        self.poset = poset
        self.d = d
        self.targets = targets
        self.members = poset.members
        self.index: Dict[int, int] = {m: i for i, m in enumerate(self.members)}
        self.failed: Set[int] = set()
        self.nodes = 0
        self.chosen: List[Interval] = []
        self.counts = [0] * d

    def _interval_bits(self, lower: int, upper: int, uncovered: int) -> Optional[int]:
        """Bits of [lower, upper] if every member lies in P and is uncovered."""
        bits = 0
        for mask in Interval(lower, upper):
            i = self.index.get(mask)
            if i is None or not (uncovered >> i) & 1:
                return None
            bits |= 1 << i
        return bits

    def _counts_final_below(self, rank: int) -> bool:
        return all(self.counts[j] == self.targets[j] for j in range(min(rank, self.d)))

    def run(self, uncovered: int) -> bool:
        self.nodes += 1
        if uncovered == 0:
            return self._counts_final_below(self.d)
        if uncovered in self.failed:
            return False

        i = (uncovered & -uncovered).bit_length() - 1
        lower = self.members[i]
        rank = popcount(lower)
        if not self._counts_final_below(rank):
            self.failed.add(uncovered)
            return False
        if rank >= self.d:
            for j in range(len(self.members)):
                if (uncovered >> j) & 1:
                    m = self.members[j]
                    self.chosen.append(Interval(m, m))
            return True
        if self.counts[rank] >= self.targets[rank]:
            self.failed.add(uncovered)
            return False

        free = [b for b in range(self.poset.n) if not (lower >> b) & 1]
        for extra in combinations(free, self.d - rank):
            upper = lower
            for b in extra:
                upper |= 1 << b
            bits = self._interval_bits(lower, upper, uncovered)
            if bits is None:
                continue
            self.chosen.append(Interval(lower, upper))
            self.counts[rank] += 1
            if self.run(uncovered & ~bits):
                return True
            self.counts[rank] -= 1
            self.chosen.pop()

        self.failed.add(uncovered)
        return False


def _check_oracle_cap(n: int, max_n: Optional[int]) -> None:
    cap = get_settings().QDEPTH_ORACLE_MAX_N if max_n is None else max_n
    if n > cap:
        raise PosetTooLargeError(
            f"Oracle search over {n} variables exceeds the cap n <= {cap}",
            details={"n": n, "cap": cap},
        )


def sdepth_poset(
    poset: SubsetPoset, d_cap: Optional[int] = None, max_n: Optional[int] = None
) -> SdepthResult:
    """
    Stanley depth of a subset family, with an optimal partition.

    Args:
        poset: Nonempty family of subsets of [n]
        d_cap: Optional largest level to try
        max_n: Size cap; defaults to QDEPTH_ORACLE_MAX_N

    Raises:
        EmptyPosetError: when the family is empty
        PosetTooLargeError: when n exceeds the cap
    """
    if poset.is_empty:
        raise EmptyPosetError()
    _check_oracle_cap(poset.n, max_n)

    alpha = alpha_vector(poset)
    top = alpha.max_rank if d_cap is None else min(alpha.max_rank, d_cap)
    full = (1 << len(poset)) - 1
    nodes = 0
    for d in range(top, alpha.min_rank - 1, -1):
        targets = beta_table(alpha, d).entries
        if any(b < 0 for b in targets):
            logger.debug("level rejected by counting", extra={"d": d})
            continue
        search = _LevelSearch(poset, d, targets)
        feasible = search.run(full)
        nodes += search.nodes
        logger.debug(
            "level searched", extra={"d": d, "feasible": feasible, "nodes": search.nodes}
        )
        if feasible:
            partition = IntervalPartition(tuple(search.chosen), poset)
            record_oracle_nodes(nodes)
            return SdepthResult(value=partition.sdepth, partition=partition, nodes=nodes)

    # Level min_rank is always feasible with singletons.
    raise InvariantViolationError(
        "No feasible level found", details={"n": poset.n, "members": len(poset)}
    )


def sdepth(
    J: MonomialIdeal, I: MonomialIdeal, max_n: Optional[int] = None
) -> SdepthResult:
    """
    Stanley depth of J/I for monomial ideals I ⊊ J, through joint polarization.
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
    _check_oracle_cap(Jp.polarized.n, max_n)
    poset = build_poset(Jp.polarized, Ip.polarized, max_n=Jp.polarized.n)
    result = sdepth_poset(poset, max_n=poset.n)
    return SdepthResult(
        value=result.value - Jp.added,
        partition=result.partition,
        n_added=Jp.added,
        nodes=result.nodes,
    )
