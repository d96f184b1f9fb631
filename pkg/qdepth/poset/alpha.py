"""
α-vectors: α_k = number of k-subsets in P_{J/I}.

Counted directly from a SubsetPoset, or from the generators by inclusion and
exclusion over lcms, which needs no enumeration of 2^n subsets.
"""

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Sequence, Tuple

from qdepth.errors import (
    AmbientMismatchError,
    DegreeOverflowError,
    NotContainedError,
    NotSquarefreeError,
    PreconditionError,
)
from qdepth.ideals import MonomialIdeal
from qdepth.numeric import binom
from qdepth.poset.poset import SubsetPoset, popcount


class AlphaMode(str, Enum):
    """Which module of a single ideal I is counted: I itself or S/I."""

    IDEAL = "ideal"
    QUOTIENT = "quotient"


@dataclass(frozen=True)
class AlphaVector:
    """
    Exact counts α_0..α_n.

    Indexing outside 0..n returns 0, which is the convention used when a
    β-table is requested at d > n.
    """

    n: int
    counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != self.n + 1:
            raise PreconditionError(
                f"An α-vector over [{self.n}] has {self.n + 1} entries, got {len(counts)}"
            )
        for k, c in enumerate(counts):
            if not 0 <= c <= binom(self.n, k):
                raise PreconditionError(
                    f"α_{k} = {c} outside 0..C({self.n},{k})",
                    details={"k": k, "value": c},
                )
        object.__setattr__(self, "counts", counts)

    @classmethod
    def boolean(cls, n: int) -> "AlphaVector":
        """α of the full lattice 2^[n]: the binomial row."""
        return cls(n, tuple(binom(n, k) for k in range(n + 1)))

    def __getitem__(self, k: int) -> int:
        if 0 <= k <= self.n:
            return self.counts[k]
        return 0

    def __iter__(self):
        return iter(self.counts)

    def __add__(self, other: "AlphaVector") -> "AlphaVector":
        """Entrywise sum: the α of a disjoint union."""
        if other.n != self.n:
            raise AmbientMismatchError("α-vectors over different ground sets")
        return AlphaVector(self.n, tuple(a + b for a, b in zip(self, other)))

    @property
    def is_zero(self) -> bool:
        return not any(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_rank(self) -> int:
        """min{k : α_k > 0}."""
        return next(k for k, c in enumerate(self.counts) if c > 0)

    @property
    def max_rank(self) -> int:
        """max{k : α_k > 0}."""
        return max(k for k, c in enumerate(self.counts) if c > 0)


def alpha_vector(poset: SubsetPoset) -> AlphaVector:
    return AlphaVector(poset.n, tuple(len(rank) for rank in poset.by_rank))


def _lcm_degree_counts(ideal: MonomialIdeal) -> Dict[int, int]:
    """
    c_d = Σ (-1)^{|J|-1} over nonempty J with deg lcm(u_J) = d.

    Signed coefficients are accumulated per lcm mask one generator at a time,
    so coinciding lcms cancel early.
    """
    signed: Dict[int, int] = defaultdict(int)
    for g in ideal.masks:
        step: Dict[int, int] = defaultdict(int)
        step[g] += 1
        for mask, c in signed.items():
            if c:
                step[mask | g] -= c
        for mask, c in step.items():
            signed[mask] += c
    by_degree: Dict[int, int] = defaultdict(int)
    for mask, c in signed.items():
        if c:
            by_degree[popcount(mask)] += c
    return by_degree


def _ideal_counts(ideal: MonomialIdeal) -> Tuple[int, ...]:
    n = ideal.n
    by_degree = _lcm_degree_counts(ideal)
    return tuple(
        sum(c * binom(n - d, k - d) for d, c in by_degree.items()) for k in range(n + 1)
    )


def alpha_by_inclusion_exclusion(
    ideal: MonomialIdeal, mode: AlphaMode = AlphaMode.IDEAL
) -> AlphaVector:
    """
    α_k(I) = Σ_{∅≠J⊆[m]} (-1)^{|J|-1} C(n - d_J, k - d_J), and
    α_k(S/I) = C(n, k) - α_k(I).
    """
    if not ideal.squarefree:
        raise NotSquarefreeError()
    counts = _ideal_counts(ideal)
    if AlphaMode(mode) is AlphaMode.QUOTIENT:
        counts = tuple(binom(ideal.n, k) - c for k, c in enumerate(counts))
    return AlphaVector(ideal.n, counts)


def alpha_quotient_pair(J: MonomialIdeal, I: MonomialIdeal) -> AlphaVector:
    """α(J/I) = α(S/I) - α(S/J)."""
    if J.n != I.n:
        raise AmbientMismatchError(
            f"J has {J.n} variables, I has {I.n}", details={"J": J.n, "I": I.n}
        )
    if not (J.squarefree and I.squarefree):
        raise NotSquarefreeError()
    if not I.is_subideal_of(J):
        raise NotContainedError()
    outer = _ideal_counts(J)
    inner = _ideal_counts(I)
    counts = tuple(a - b for a, b in zip(outer, inner))
    negative = [k for k, c in enumerate(counts) if c < 0]
    if negative:
        raise NotContainedError(
            "Negative α entry: I is not contained in J",
            details={"k": negative[0], "value": counts[negative[0]]},
        )
    return AlphaVector(J.n, counts)


def ci_degree_polynomial(degs: Sequence[int]) -> Tuple[int, ...]:
    """Coefficients of Π_j (1 - z^{d_j}), index = degree."""
    coeffs = [1]
    for d in degs:
        shifted = [0] * d + [-c for c in coeffs]
        coeffs = [
            (coeffs[i] if i < len(coeffs) else 0) + shifted[i]
            for i in range(len(shifted))
        ]
    return tuple(coeffs)


def alpha_ci(
    n: int, degs: Iterable[int], mode: AlphaMode = AlphaMode.QUOTIENT
) -> AlphaVector:
    """
    α of a squarefree complete intersection with generator degrees ``degs``.

    Disjoint supports make u_J = Π_{j∈J} u_j, so d_J = Σ_{j∈J} d_j and only
    the degree multiset matters.
    """
    degs = list(degs)
    if any(d < 1 for d in degs):
        raise PreconditionError("Generator degrees must be at least 1")
    if sum(degs) > n:
        raise DegreeOverflowError(
            f"Degrees sum to {sum(degs)} > n = {n}", details={"degs": degs, "n": n}
        )
    poly = ci_degree_polynomial(degs)
    quotient = tuple(
        sum(c * binom(n - d, k - d) for d, c in enumerate(poly) if c)
        for k in range(n + 1)
    )
    if AlphaMode(mode) is AlphaMode.QUOTIENT:
        return AlphaVector(n, quotient)
    return AlphaVector(n, tuple(binom(n, k) - c for k, c in enumerate(quotient)))
