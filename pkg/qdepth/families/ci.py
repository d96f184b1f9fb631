"""
Squarefree monomial complete intersections: generators with pairwise disjoint
supports, so α depends only on n and the generator degrees.

qdepth(S/I) = n - m for such an ideal with m generators. The β-symmetry check
looks at β_k^d + β_{d-k}^d = 0 at the two candidate levels d = n - m + 1 and
d = n + m - 1 and reports which of them shows it; nothing about symmetry is
asserted. The endpoint β_{n-m+1}^{n-m+1} is asserted: it is -1 when the
generators use all n variables and 0 otherwise.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from qdepth.errors import DegreeOverflowError, InvariantViolationError, PreconditionError
from qdepth.ideals import Monomial, MonomialIdeal
from qdepth.invariants import beta_table, qdepth_alpha
from qdepth.poset import AlphaMode, alpha_ci

logger = logging.getLogger(__name__)

LOW_LEVEL = "n-m+1"
HIGH_LEVEL = "n+m-1"
OVERRIDE_LEVEL = "override"


def _check_degs(n: int, degs: Sequence[int]) -> Tuple[int, ...]:
    degs = tuple(degs)
    if not degs:
        raise PreconditionError("A complete intersection needs at least one generator")
    if any(d < 1 for d in degs):
        raise PreconditionError(
            "Generator degrees must be at least 1", details={"degs": list(degs)}
        )
    if sum(degs) > n:
        raise DegreeOverflowError(
            f"Degrees sum to {sum(degs)} > n = {n}",
            details={"degs": list(degs), "n": n},
        )
    return degs


def complete_intersection(n: int, degs: Iterable[int]) -> MonomialIdeal:
    """
    The CI with consecutive supports: x1...x_{d1}, x_{d1+1}...x_{d1+d2}, ...
    """
    degs = _check_degs(n, list(degs))
    gens = []
    start = 1
    for d in degs:
        gens.append(Monomial.from_indices(range(start, start + d), n))
        start += d
    return MonomialIdeal(n, tuple(gens))


@dataclass(frozen=True)
class SymmetryCheck:
    """
    Attributes:
        d: Level of the β-table
        label: Which candidate level d is (n-m+1, n+m-1 or override)
        entries: β_0^d..β_d^d
        violations: (k, β_k^d + β_{d-k}^d) for k <= d/2 with a nonzero sum
    """

    d: int
    label: str
    entries: Tuple[int, ...]
    violations: Tuple[Tuple[int, int], ...]

    @property
    def symmetric(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class CISymmetryReport:
    """
    Attributes:
        n: Ambient size
        degs: Generator degrees
        checks: One SymmetryCheck per tested level
        endpoint: β_{n-m+1}^{n-m+1} of S/I
        support_endpoint: The same entry computed in the Σ degs variables the
            generators use; always -1
    """

    n: int
    degs: Tuple[int, ...]
    checks: Tuple[SymmetryCheck, ...]
    endpoint: int
    support_endpoint: int

    @property
    def m(self) -> int:
        return len(self.degs)


def _symmetry_check(n: int, degs: Tuple[int, ...], d: int, label: str) -> SymmetryCheck:
    table = beta_table(alpha_ci(n, degs, AlphaMode.QUOTIENT), d)
    violations = tuple(
        (k, table[k] + table[d - k])
        for k in range(d // 2 + 1)
        if table[k] + table[d - k] != 0
    )
    return SymmetryCheck(d=d, label=label, entries=table.entries, violations=violations)


def _endpoint(n: int, degs: Tuple[int, ...]) -> int:
    d = n - len(degs) + 1
    return beta_table(alpha_ci(n, degs, AlphaMode.QUOTIENT), d)[d]


def ci_symmetry(
    n: int, degs: Iterable[int], d_override: Optional[int] = None
) -> CISymmetryReport:
    """
    β-symmetry report for S/I, I a squarefree CI with the given degrees.

    Args:
        n: Ambient size
        degs: Generator degrees, summing to at most n
        d_override: Test only this level instead of both candidates

    Raises:
        DegreeOverflowError: when the degrees sum past n
        InvariantViolationError: when the endpoint entry is not the proved value
    """
    degs = _check_degs(n, list(degs))
    m = len(degs)
    if d_override is not None:
        if d_override < 0:
            raise PreconditionError(
                f"d must be non-negative, got {d_override}", details={"d": d_override}
            )
        checks: Tuple[SymmetryCheck, ...] = (
            _symmetry_check(n, degs, d_override, OVERRIDE_LEVEL),
        )
    else:
        checks = (
            _symmetry_check(n, degs, n - m + 1, LOW_LEVEL),
            _symmetry_check(n, degs, n + m - 1, HIGH_LEVEL),
        )

    endpoint = _endpoint(n, degs)
    expected = -1 if sum(degs) == n else 0
    support_endpoint = _endpoint(sum(degs), degs)
    if endpoint != expected or support_endpoint != -1:
        raise InvariantViolationError(
            "Complete-intersection endpoint β entry has the wrong value",
            details={
                "n": n,
                "degs": list(degs),
                "endpoint": endpoint,
                "expected": expected,
                "support_endpoint": support_endpoint,
            },
        )

    logger.debug(
        "ci symmetry",
        extra={
            "n": n,
            "degs": list(degs),
            "symmetric": [c.label for c in checks if c.symmetric],
        },
    )
    return CISymmetryReport(
        n=n,
        degs=degs,
        checks=checks,
        endpoint=endpoint,
        support_endpoint=support_endpoint,
    )


def ci_qdepth(n: int, degs: Iterable[int]) -> int:
    """qdepth(S/I) from the closed-form α; asserted to be n - m."""
    degs = _check_degs(n, list(degs))
    value = qdepth_alpha(alpha_ci(n, degs, AlphaMode.QUOTIENT)).value
    if value != n - len(degs):
        raise InvariantViolationError(
            f"qdepth(S/CI) = {value} != n - m",
            details={"n": n, "degs": list(degs), "value": value},
        )
    return value


def ci_qdepth_check(n: int, degs: Iterable[int]) -> bool:
    ci_qdepth(n, degs)
    return True
