"""Interval partitions of a subset family."""

from dataclasses import dataclass
from typing import Tuple

from qdepth.errors import InvariantViolationError
from qdepth.poset import Interval, SubsetPoset


@dataclass(frozen=True)
class IntervalPartition:
    """
    P = [C_1, D_1] ⊔ ... ⊔ [C_r, D_r].

    Attributes:
        intervals: The intervals, in the order the search chose them
        poset: The family being partitioned
    """

    intervals: Tuple[Interval, ...]
    poset: SubsetPoset

    @property
    def sdepth(self) -> int:
        """min |D_i|."""
        return min(iv.upper_size for iv in self.intervals)

    def validate(self) -> None:
        """
        Raise InvariantViolationError unless the intervals are pairwise
        disjoint, have their endpoints in P and cover exactly P.
        """
        seen = set()
        for iv in self.intervals:
            if iv.lower not in self.poset or iv.upper not in self.poset:
                raise InvariantViolationError(
                    "Interval endpoint outside the poset",
                    details={"lower": iv.lower, "upper": iv.upper},
                )
            for mask in iv:
                if mask in seen:
                    raise InvariantViolationError(
                        "Intervals overlap", details={"mask": mask}
                    )
                seen.add(mask)
        if seen != set(self.poset.member_set):
            raise InvariantViolationError(
                "Intervals do not cover the poset exactly",
                details={"covered": len(seen), "members": len(self.poset)},
            )
