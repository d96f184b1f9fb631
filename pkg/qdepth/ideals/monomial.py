"""
Monomials as exponent vectors over a fixed number of variables.

Variables are numbered 1..n in text and 0..n-1 in the exponent tuple. A
squarefree monomial is identified with the bitmask of its support.
"""

from dataclasses import dataclass, field
from typing import Iterable, Tuple

from qdepth.errors import AmbientMismatchError, PreconditionError


@dataclass(frozen=True)
class Monomial:
    """
    x^g = x_1^{g_1} ... x_n^{g_n}.

    Attributes:
        exponents: Non-negative exponents, one per ambient variable
        degree: Sum of the exponents (computed)
    """

    exponents: Tuple[int, ...]
    degree: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        exponents = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exponents):
            raise PreconditionError(
                "Exponents must be non-negative", details={"exponents": list(exponents)}
            )
        object.__setattr__(self, "exponents", exponents)
        object.__setattr__(self, "degree", sum(exponents))

    @classmethod
    def unit(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "Monomial":
        """Squarefree monomial x_C for the subset C encoded by ``mask``."""
        return cls(tuple((mask >> i) & 1 for i in range(n)))

    @classmethod
    def from_indices(cls, indices: Iterable[int], n: int) -> "Monomial":
        """Product of the given 1-based variables, repeated indices multiply."""
        exponents = [0] * n
        for i in indices:
            if not 1 <= i <= n:
                raise PreconditionError(
                    f"Variable index {i} outside 1..{n}", details={"index": i, "n": n}
                )
            exponents[i - 1] += 1
        return cls(tuple(exponents))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def is_unit(self) -> bool:
        return self.degree == 0

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    @property
    def support(self) -> int:
        """Bitmask of the variables with positive exponent."""
        mask = 0
        for i, e in enumerate(self.exponents):
            if e:
                mask |= 1 << i
        return mask

    def _check_ambient(self, other: "Monomial") -> None:
        if self.n != other.n:
            raise AmbientMismatchError(
                f"Monomials live in {self.n} and {other.n} variables"
            )

    def divides(self, other: "Monomial") -> bool:
        self._check_ambient(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_ambient(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check_ambient(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other): the generator of (self) : other."""
        self._check_ambient(other)
        return Monomial(
            tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents))
        )

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check_ambient(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def extend(self, k: int) -> "Monomial":
        """The same monomial in n + k variables."""
        return Monomial(self.exponents + (0,) * k)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Canonical order: by degree, then lexicographic with x1 > x2 > ..."""
        return (self.degree, tuple(-e for e in self.exponents))

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        terms = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                terms.append(f"x{i}")
            elif e > 1:
                terms.append(f"x{i}^{e}")
        return "*".join(terms)
