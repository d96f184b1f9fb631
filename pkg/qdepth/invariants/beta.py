"""
β-tables: the integer sequence β_0^d..β_d^d attached to an α-vector.

    β_k^d = α_k - Σ_{j<k} β_j^d C(d - j, k - j)

with α_k = 0 for k > n. All arithmetic is on exact Python integers.
"""

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from qdepth.errors import InvariantViolationError, PreconditionError
from qdepth.numeric import binom
from qdepth.poset import AlphaVector


@dataclass(frozen=True)
class Blocker:
    """The least k with β_k^d < 0, and that entry."""

    d: int
    k: int
    value: int


@dataclass(frozen=True)
class BetaTable:
    """
    Attributes:
        d: Target depth parameter
        entries: β_0^d..β_d^d
        source_alpha: The α-vector the table was derived from
    """

    d: int
    entries: Tuple[int, ...]
    source_alpha: AlphaVector

    def __getitem__(self, k: int) -> int:
        return self.entries[k]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def is_nonnegative(self) -> bool:
        return all(b >= 0 for b in self.entries)

    @property
    def first_negative(self) -> Optional[Blocker]:
        for k, b in enumerate(self.entries):
            if b < 0:
                return Blocker(d=self.d, k=k, value=b)
        return None


def _check_d(d: int) -> None:
    if d < 0:
        raise PreconditionError(f"d must be non-negative, got {d}", details={"d": d})


def iter_beta(alpha: AlphaVector, d: int) -> Iterator[int]:
    """Yield β_0^d, β_1^d, ... lazily, so callers can stop at a negative entry."""
    _check_d(d)
    computed = []
    for k in range(d + 1):
        value = alpha[k]
        for j, b in enumerate(computed):
            if b:
                value -= b * binom(d - j, k - j)
        computed.append(value)
        yield value


def beta_table(alpha: AlphaVector, d: int) -> BetaTable:
    return BetaTable(d=d, entries=tuple(iter_beta(alpha, d)), source_alpha=alpha)


def beta_closed(alpha: AlphaVector, d: int, k: int) -> int:
    """β_k^d = Σ_{j=0}^k (-1)^{k-j} C(d - j, k - j) α_j."""
    _check_d(d)
    if not 0 <= k <= d:
        raise PreconditionError(f"k must lie in 0..{d}, got {k}", details={"k": k})
    return sum(
        (-1) ** (k - j) * binom(d - j, k - j) * alpha[j] for j in range(k + 1)
    )


def alpha_from_beta(table: BetaTable) -> Tuple[int, ...]:
    """
    α_k = Σ_{j=0}^k C(d - j, k - j) β_j^d for k = 0..d.

    Returns the reconstructed prefix α_0..α_d; entries past n are 0 when the
    table is consistent.
    """
    d = table.d
    return tuple(
        sum(binom(d - j, k - j) * table[j] for j in range(k + 1)) for k in range(d + 1)
    )


def verify_roundtrip(table: BetaTable) -> None:
    """Raise InvariantViolationError unless α is recovered on 0..d."""
    recovered = alpha_from_beta(table)
    expected = tuple(table.source_alpha[k] for k in range(table.d + 1))
    if recovered != expected:
        raise InvariantViolationError(
            "α↔β inversion failed",
            details={"d": table.d, "expected": list(expected), "got": list(recovered)},
        )
