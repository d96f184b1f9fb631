"""
Characteristic posets P_{J/I} as families of bitmask subsets of [n].

Bit i of a mask stands for the variable x_{i+1}.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

from qdepth.config import HARD_MAX_N, get_settings
from qdepth.errors import (
    AmbientMismatchError,
    NotContainedError,
    NotSquarefreeError,
    PosetTooLargeError,
    PreconditionError,
)
from qdepth.ideals import MonomialIdeal


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_to_indices(mask: int) -> List[int]:
    """Sorted 1-based variable indices of a subset mask."""
    return [i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1]


def indices_to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def submasks(mask: int) -> Iterator[int]:
    """Every subset of ``mask``, from ``mask`` itself down to 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class Interval:
    """
    [C, D] = {A : C ⊆ A ⊆ D}.

    Attributes:
        lower: C as a bitmask
        upper: D as a bitmask
    """

    lower: int
    upper: int

    def __post_init__(self) -> None:
        if self.lower & ~self.upper:
            raise PreconditionError(
                "Interval lower endpoint must be contained in the upper endpoint",
                details={"lower": self.lower, "upper": self.upper},
            )

    def __contains__(self, mask: int) -> bool:
        return mask & self.lower == self.lower and mask | self.upper == self.upper

    def __len__(self) -> int:
        return 1 << popcount(self.upper & ~self.lower)

    def __iter__(self) -> Iterator[int]:
        for free in submasks(self.upper & ~self.lower):
            yield self.lower | free

    @property
    def upper_size(self) -> int:
        return popcount(self.upper)

    @property
    def lower_size(self) -> int:
        return popcount(self.lower)


def _rank_key(mask: int) -> Tuple[int, int]:
    return (popcount(mask), mask)


@dataclass(frozen=True)
class SubsetPoset:
    """
    A finite family of subsets of [n].

    Attributes:
        n: Ambient size
        members: Distinct subset masks ordered by (cardinality, mask)
        by_rank: members grouped by cardinality, index k holds the k-subsets
    """

    n: int
    members: Tuple[int, ...]
    by_rank: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    member_set: FrozenSet[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= HARD_MAX_N:
            raise PosetTooLargeError(
                f"Ambient size {self.n} outside 0..{HARD_MAX_N}",
                details={"n": self.n, "max": HARD_MAX_N},
            )
        member_set = frozenset(self.members)
        if len(member_set) != len(self.members):
            raise PreconditionError("Poset members must be distinct")
        if any(m < 0 or m >> self.n for m in member_set):
            raise PreconditionError(f"Poset members must be subsets of [{self.n}]")
        members = tuple(sorted(member_set, key=_rank_key))
        ranks: List[List[int]] = [[] for _ in range(self.n + 1)]
        for m in members:
            ranks[popcount(m)].append(m)
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "member_set", member_set)
        object.__setattr__(self, "by_rank", tuple(tuple(r) for r in ranks))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SubsetPoset":
        return cls(n, tuple(set(masks)))

    @classmethod
    def boolean_lattice(cls, n: int) -> "SubsetPoset":
        return cls(n, tuple(range(1 << n)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self.member_set

    @property
    def is_empty(self) -> bool:
        return not self.members

    def contains_interval(self, interval: Interval) -> bool:
        return all(a in self.member_set for a in interval)

    def union(self, other: "SubsetPoset") -> "SubsetPoset":
        """Union of two disjoint families over the same [n]."""
        if other.n != self.n:
            raise AmbientMismatchError("Posets live over different ground sets")
        if self.member_set & other.member_set:
            raise PreconditionError("Posets are not disjoint")
        return SubsetPoset(self.n, self.members + other.members)

    def difference(self, other: "SubsetPoset") -> "SubsetPoset":
        if other.n != self.n:
            raise AmbientMismatchError("Posets live over different ground sets")
        return SubsetPoset(self.n, tuple(self.member_set - other.member_set))


def _upset_masks(ideal: MonomialIdeal, n: int) -> set:
    """All x_C in a squarefree ideal: supersets of some generator support."""
    full = (1 << n) - 1
    found: set = set()
    for g in ideal.masks:
        for free in submasks(full & ~g):
            found.add(g | free)
    return found


def build_poset(
    J: MonomialIdeal, I: MonomialIdeal, max_n: Optional[int] = None
) -> SubsetPoset:
    """
    P_{J/I} = {C ⊆ [n] : x_C ∈ J and x_C ∉ I}.

    Args:
        J: Squarefree outer ideal
        I: Squarefree ideal contained in J
        max_n: Enumeration cap; defaults to QDEPTH_MAX_N

    Raises:
        NotSquarefreeError: when either ideal is not squarefree
        AmbientMismatchError: when the ambient sizes differ
        NotContainedError: when I is not contained in J
        PosetTooLargeError: when n exceeds the cap
    """
    if not (J.squarefree and I.squarefree):
        raise NotSquarefreeError(
            "build_poset needs squarefree ideals; polarize first"
        )
    if J.n != I.n:
        raise AmbientMismatchError(
            f"J has {J.n} variables, I has {I.n}",
            details={"J": J.n, "I": I.n},
        )
    cap = get_settings().QDEPTH_MAX_N if max_n is None else max_n
    if J.n > cap:
        raise PosetTooLargeError(
            f"Enumerating 2^{J.n} subsets exceeds the cap n <= {cap}",
            details={"n": J.n, "cap": cap},
        )
    if not I.is_subideal_of(J):
        raise NotContainedError()
    members = [c for c in _upset_masks(J, J.n) if not I.contains_mask(c)]
    return SubsetPoset(J.n, tuple(members))
