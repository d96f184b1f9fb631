"""
Squarefree Veronese ideals J_{n,m}, generated by every squarefree monomial of
degree m in n variables.

Their α-vectors have a closed form, so quasi depths are computed without
building a poset. With q = floor((n - m)/(m + 1)):

- qdepth(S/J_{n,m}) = m - 1
- m <= qdepth(J_{n,m}) <= m + q, with equality on the right whenever
  n <= max{m^2 + 4m + 1, 7m + 5}
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Tuple

from qdepth.cache import cache
from qdepth.errors import InvariantViolationError, PreconditionError
from qdepth.families.econj import E
from qdepth.ideals import MonomialIdeal
from qdepth.invariants import beta_table, qdepth_alpha
from qdepth.numeric import binom
from qdepth.poset import AlphaMode, AlphaVector, indices_to_mask

logger = logging.getLogger(__name__)

CLOSED_FORM = "closed-form-alpha"


def _check_bounds(n: int, m: int) -> None:
    if not 1 <= m <= n:
        raise PreconditionError(
            f"A squarefree Veronese ideal needs 1 <= m <= n, got n={n}, m={m}",
            details={"n": n, "m": m},
        )


@dataclass(frozen=True)
class VeroneseSpec:
    """(n, m) together with the derived q = floor((n - m)/(m + 1))."""

    n: int
    m: int
    q: int = field(init=False)

    def __post_init__(self) -> None:
        _check_bounds(self.n, self.m)
        object.__setattr__(self, "q", (self.n - self.m) // (self.m + 1))

    @property
    def upper_bound(self) -> int:
        return self.m + self.q

    @property
    def boundary_n(self) -> int:
        """mq + m + q, the least n the E-conjecture speaks about for this (m, q)."""
        return self.m * self.q + self.m + self.q


def veronese_ideal(n: int, m: int) -> MonomialIdeal:
    _check_bounds(n, m)
    masks = (indices_to_mask(c) for c in combinations(range(1, n + 1), m))
    return MonomialIdeal.from_masks(masks, n)


@cache(prefix="alpha_veronese")
def _alpha_veronese(n: int, m: int, mode: str) -> AlphaVector:
    if mode == AlphaMode.QUOTIENT.value:
        counts = tuple(binom(n, k) if k < m else 0 for k in range(n + 1))
    else:
        counts = tuple(binom(n, k) if k >= m else 0 for k in range(n + 1))
    return AlphaVector(n, counts)


def alpha_veronese(n: int, m: int, mode: AlphaMode = AlphaMode.QUOTIENT) -> AlphaVector:
    """
    Closed-form α of S/J_{n,m} (C(n,k) below m, 0 from m on) or of J_{n,m}
    (the complement within the binomial row).
    """
    _check_bounds(n, m)
    return _alpha_veronese(n, m, AlphaMode(mode).value)


def in_theorem_region(n: int, m: int) -> bool:
    """n <= max{m^2 + 4m + 1, 7m + 5}, equivalently q <= max{m + 1, 5}."""
    return n <= max(m * m + 4 * m + 1, 7 * m + 5)


def region_max_n(m: int) -> int:
    return max(m * m + 4 * m + 1, 7 * m + 5)


@dataclass(frozen=True)
class VeroneseResult:
    """
    Attributes:
        spec: The (n, m, q) triple
        value: qdepth(J_{n,m})
        quotient_value: qdepth(S/J_{n,m})
        in_theorem_region: Whether value = m + q is a proved equality here
        method: How value was computed
    """

    spec: VeroneseSpec
    value: int
    quotient_value: int
    in_theorem_region: bool
    method: str = CLOSED_FORM

    @property
    def upper_bound(self) -> int:
        return self.spec.upper_bound


def _violation(message: str, spec: VeroneseSpec, value: int) -> InvariantViolationError:
    return InvariantViolationError(
        message, details={"n": spec.n, "m": spec.m, "q": spec.q, "value": value}
    )


def qdepth_veronese(n: int, m: int) -> VeroneseResult:
    """
    qdepth of J_{n,m} and of S/J_{n,m} from the closed-form α.

    Raises:
        InvariantViolationError: when a proved value or bound is not met
    """
    spec = VeroneseSpec(n, m)
    value = qdepth_alpha(alpha_veronese(n, m, AlphaMode.IDEAL)).value
    quotient_value = qdepth_alpha(alpha_veronese(n, m, AlphaMode.QUOTIENT)).value
    region = in_theorem_region(n, m)

    if quotient_value != m - 1:
        raise _violation(f"qdepth(S/J_{{n,m}}) = {quotient_value} != m - 1", spec, quotient_value)
    if value > spec.upper_bound:
        raise _violation(f"qdepth(J_{{n,m}}) = {value} exceeds m + q", spec, value)
    if region and value != spec.upper_bound:
        raise _violation(f"qdepth(J_{{n,m}}) = {value} != m + q inside the region", spec, value)
    if n <= 2 * m and value != m:
        raise _violation(f"qdepth(J_{{n,m}}) = {value} != m for n <= 2m", spec, value)
    if m == 1 and value != (n + 1) // 2:
        raise _violation(f"qdepth(m) = {value} != ceil(n/2)", spec, value)

    logger.debug(
        "veronese qdepth", extra={"n": n, "m": m, "value": value, "region": region}
    )
    return VeroneseResult(
        spec=spec, value=value, quotient_value=quotient_value, in_theorem_region=region
    )


def veronese_region_scan(m_max: int) -> Iterator[VeroneseResult]:
    """Every (n, m) with m <= m_max and m <= n <= max{m^2 + 4m + 1, 7m + 5}."""
    if m_max < 1:
        raise PreconditionError("m_max must be at least 1", details={"m_max": m_max})
    for m in range(1, m_max + 1):
        for n in range(m, region_max_n(m) + 1):
            yield qdepth_veronese(n, m)


def veronese_critical_betas(n: int, m: int) -> Tuple[Tuple[int, int], ...]:
    """
    (β_{m+t}^{m+q}(J_{n,m}), E(m,q,t,n)) for t = 1..q; needs n >= 2m + 1.

    Raises:
        InvariantViolationError: when a pair disagrees
    """
    spec = VeroneseSpec(n, m)
    if n < 2 * m + 1:
        raise PreconditionError(
            f"n must be at least 2m + 1, got n={n}, m={m}", details={"n": n, "m": m}
        )
    table = beta_table(alpha_veronese(n, m, AlphaMode.IDEAL), spec.upper_bound)
    pairs = []
    for t in range(1, spec.q + 1):
        pair = (table[m + t], E(m, spec.q, t, n))
        if pair[0] != pair[1]:
            raise InvariantViolationError(
                "Critical β entry of J_{n,m} differs from E",
                details={"n": n, "m": m, "t": t, "beta": pair[0], "E": pair[1]},
            )
        pairs.append(pair)
    return tuple(pairs)
