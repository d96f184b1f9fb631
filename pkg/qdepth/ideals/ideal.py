"""
Monomial ideals stored by their minimal generators.

Generators are kept in canonical order (degree, then lexicographic with
x1 > x2 > ...). Generator indices used by ``lcm_subset`` are 0-based
positions in that order. The zero ideal has no generators; the unit ideal
has the single degree-0 generator.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Tuple

from qdepth.errors import AmbientMismatchError, IndexOutOfRangeError, PreconditionError
from qdepth.ideals.monomial import Monomial


def minimalize(gens: Iterable[Monomial]) -> FrozenSet[Monomial]:
    """
    Return the inclusion-minimal generating subset of ``gens``.

    No member of the result divides another, and every input is divisible by
    some member. The result does not depend on the input order.
    """
    kept: list = []
    for g in sorted(set(gens), key=Monomial.sort_key):
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """
    A monomial ideal in K[x_1, ..., x_n].

    Attributes:
        n: Ambient variable count
        generators: Minimal generators in canonical order
        squarefree: True iff every generator exponent is at most 1
    """

    n: int
    generators: Tuple[Monomial, ...] = ()
    squarefree: bool = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise PreconditionError("Ambient variable count must be non-negative")
        for g in self.generators:
            if g.n != self.n:
                raise AmbientMismatchError(
                    f"Generator {g} has {g.n} variables, ideal has {self.n}"
                )
        gens = tuple(sorted(minimalize(self.generators), key=Monomial.sort_key))
        object.__setattr__(self, "generators", gens)
        object.__setattr__(
            self, "squarefree", all(g.is_squarefree for g in gens)
        )

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (Monomial.unit(n),))

    @classmethod
    def from_masks(cls, masks: Iterable[int], n: int) -> "MonomialIdeal":
        """Squarefree ideal generated by x_C for each subset mask C."""
        return cls(n, tuple(Monomial.from_mask(m, n) for m in masks))

    @property
    def m(self) -> int:
        """Number of minimal generators."""
        return len(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.m == 1 and self.generators[0].is_unit

    @property
    def masks(self) -> Tuple[int, ...]:
        """Supports of the generators, in canonical order."""
        return tuple(g.support for g in self.generators)

    @property
    def support(self) -> int:
        """Bitmask of every variable occurring in some generator."""
        mask = 0
        for g in self.generators:
            mask |= g.support
        return mask

    def _check_ambient(self, other_n: int) -> None:
        if other_n != self.n:
            raise AmbientMismatchError(
                f"Expected {self.n} variables, got {other_n}",
                details={"expected": self.n, "actual": other_n},
            )

    def contains(self, u: Monomial) -> bool:
        """u lies in the ideal iff some minimal generator divides it."""
        self._check_ambient(u.n)
        return any(g.divides(u) for g in self.generators)

    def contains_mask(self, mask: int) -> bool:
        """Membership of the squarefree monomial x_C in a squarefree ideal."""
        if not self.squarefree:
            raise PreconditionError(
                "Mask membership needs a squarefree ideal", details={"ideal": str(self)}
            )
        for g in self.masks:
            if g & mask == g:
                return True
        return False

    def is_subideal_of(self, other: "MonomialIdeal") -> bool:
        self._check_ambient(other.n)
        return all(other.contains(g) for g in self.generators)

    def extend(self, k: int = 1) -> "MonomialIdeal":
        """The ideal generated by the same monomials in n + k variables."""
        return MonomialIdeal(self.n + k, tuple(g.extend(k) for g in self.generators))

    def multiply(self, u: Monomial) -> "MonomialIdeal":
        """u * I."""
        self._check_ambient(u.n)
        return MonomialIdeal(self.n, tuple(g * u for g in self.generators))

    def add_generator(self, u: Monomial) -> "MonomialIdeal":
        """The sum (I, u)."""
        self._check_ambient(u.n)
        return MonomialIdeal(self.n, self.generators + (u,))

    def colon(self, u: Monomial) -> "MonomialIdeal":
        """I : u, generated by g / gcd(g, u)."""
        self._check_ambient(u.n)
        return MonomialIdeal(self.n, tuple(g.quotient(u) for g in self.generators))

    def intersection(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """I ∩ J, generated by the pairwise lcms."""
        self._check_ambient(other.n)
        return MonomialIdeal(
            self.n,
            tuple(a.lcm(b) for a in self.generators for b in other.generators),
        )

    def __str__(self) -> str:
        from qdepth.ideals.grammar import format_ideal

        return format_ideal(self)


def lcm_subset(ideal: MonomialIdeal, jset: Iterable[int]) -> Monomial:
    """
    u_J = lcm(u_j : j in J) over 0-based generator positions.

    The empty set gives the unit monomial (d_∅ = 0).
    """
    result = Monomial.unit(ideal.n)
    for j in jset:
        if not 0 <= j < ideal.m:
            raise IndexOutOfRangeError(
                f"Generator index {j} outside 0..{ideal.m - 1}",
                details={"index": j, "m": ideal.m},
            )
        result = result.lcm(ideal.generators[j])
    return result
