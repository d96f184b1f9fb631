"""
The alternating binomial sums behind the critical β entries of J_{n,m}:

    E(m, q, t, n) = Σ_{j=0}^{t} (-1)^{t-j} C(q - j, t - j) C(n, m + j)

conjectured non-negative for m >= 1, q >= t >= 1 and n >= mq + m + q. This
module evaluates E directly, through both recursions and through the
falling-factorial forms at n = mq + m + q, classifies (m, q, t) cells by the
proved cases, and scans grids of cells.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from qdepth.errors import InvariantViolationError, PreconditionError
from qdepth.monitoring import record_scan_cell
from qdepth.numeric import binom, falling_factorial

logger = logging.getLogger(__name__)

CellKey = Tuple[int, int, int]


class ProofStatus(str, Enum):
    """Why a cell is known to satisfy E >= 0, or OPEN."""

    M1_CASE = "m1-case"
    T1_LEMMA = "t1-lemma"
    T_EQ_Q_LEMMA = "t-eq-q-lemma"
    Q_SMALL = "q-small"
    T_LE_4 = "t-le-4"
    OPEN = "open"


def _check_mqt(m: int, q: int, t: int) -> None:
    if m < 1 or not 1 <= t <= q:
        raise PreconditionError(
            f"Need m >= 1 and q >= t >= 1, got m={m}, q={q}, t={t}",
            details={"m": m, "q": q, "t": t},
        )


def boundary_n(m: int, q: int) -> int:
    """mq + m + q."""
    return m * q + m + q


def E(m: int, q: int, t: int, n: int) -> int:
    _check_mqt(m, q, t)
    if n < 0:
        raise PreconditionError(f"n must be non-negative, got {n}", details={"n": n})
    return sum(
        (-1) ** (t - j) * binom(q - j, t - j) * binom(n, m + j) for j in range(t + 1)
    )


def E_rec_q(m: int, q: int, t: int, n: int) -> int:
    """E(m,q,t,n) = E(m,q-1,t,n) - E(m,q-1,t-1,n), for q > t >= 2."""
    if not q > t >= 2:
        raise PreconditionError(
            f"The q-recursion needs q > t >= 2, got q={q}, t={t}",
            details={"q": q, "t": t},
        )
    return E(m, q - 1, t, n) - E(m, q - 1, t - 1, n)


def E_rec_n(m: int, q: int, t: int, n: int) -> int:
    """E(m,q,t,n) = E(m,q,t,n-1) + E(m-1,q,t,n-1), for m >= 2 and n >= 1."""
    if m < 2 or n < 1:
        raise PreconditionError(
            f"The n-recursion needs m >= 2 and n >= 1, got m={m}, n={n}",
            details={"m": m, "n": n},
        )
    return E(m, q, t, n - 1) + E(m - 1, q, t, n - 1)


def gamma(m: int, q: int, t: int, j: int, n: int) -> int:
    """Γ(m,q,t,j,n) = C(q - j, t - j) C(n, m + j), the j-th term of E up to sign."""
    _check_mqt(m, q, t)
    if not 0 <= j <= t:
        raise PreconditionError(f"j must lie in 0..{t}, got {j}", details={"j": j})
    return binom(q - j, t - j) * binom(n, m + j)


def alpha_ratio(m: int, q: int, t: int, j: int) -> Fraction:
    """
    Γ(j+1)/Γ(j) at n = mq + m + q:

        (t - j)(mq + q - j) / ((q - j)(m + j + 1))
    """
    _check_mqt(m, q, t)
    if not 0 <= j <= t - 1:
        raise PreconditionError(f"j must lie in 0..{t - 1}, got {j}", details={"j": j})
    return Fraction((t - j) * (m * q + q - j), (q - j) * (m + j + 1))


@dataclass(frozen=True)
class RatioBounds:
    """lower <= alpha_ratio(m,q,t,j) <= upper; upper is None when only a lower bound is known."""

    lower: Fraction
    upper: Optional[Fraction]

    def __contains__(self, value: Fraction) -> bool:
        return self.lower <= value and (self.upper is None or value <= self.upper)


def alpha_ratio_bounds(m: int, q: int, t: int, j: int) -> RatioBounds:
    """
    For q >= t >= 2 and 0 <= j <= t - 1:

    - q <= m + t - 1: the ratio is at least 1
    - q >= m + t: (m+1)/(m+j+1) <= ratio <= (t-j)((m+1)(m+t)-j) / ((m+1)(m+t)+(t-1-j)j)
    """
    _check_mqt(m, q, t)
    if t < 2 or not 0 <= j <= t - 1:
        raise PreconditionError(
            f"Ratio bounds need t >= 2 and 0 <= j <= t - 1, got t={t}, j={j}",
            details={"t": t, "j": j},
        )
    if q <= m + t - 1:
        return RatioBounds(lower=Fraction(1), upper=None)
    top = (m + 1) * (m + t)
    return RatioBounds(
        lower=Fraction(m + 1, m + j + 1),
        upper=Fraction((t - j) * (top - j), top + (t - 1 - j) * j),
    )


def _require_integral(value: Fraction, m: int, q: int, t: int) -> int:
    if value.denominator != 1:
        raise InvariantViolationError(
            "Falling-factorial form of E is not integral",
            details={"m": m, "q": q, "t": t, "value": str(value)},
        )
    return value.numerator


def E_falling_factorial(m: int, q: int, t: int) -> int:
    """
    E(m, q, t, N) at N = mq + m + q, summed from Γ(0) upwards:

        C(q,t) C(N,m) Σ_j (-1)^{t-j} (t)_j (mq+q)_j / ((q)_j (m+j)_j)

    Raises:
        InvariantViolationError: if the rational sum is not an integer
    """
    _check_mqt(m, q, t)
    n = boundary_n(m, q)
    total = sum(
        (-1) ** (t - j)
        * Fraction(
            falling_factorial(t, j) * falling_factorial(m * q + q, j),
            falling_factorial(q, j) * falling_factorial(m + j, j),
        )
        for j in range(t + 1)
    )
    return _require_integral(binom(q, t) * binom(n, m) * total, m, q, t)


def E_falling_factorial_reversed(m: int, q: int, t: int) -> int:
    """
    E(m, q, t, N) at N = mq + m + q, summed from Γ(t) = C(N, m+t) downwards:

        C(N, m+t) Σ_j (-1)^{t-j} Π_{ℓ=j}^{t-1} 1/alpha_ratio(m,q,t,ℓ)
    """
    _check_mqt(m, q, t)
    n = boundary_n(m, q)
    ratios = [alpha_ratio(m, q, t, ell) for ell in range(t)]
    total = Fraction(0)
    product = Fraction(1)
    for j in range(t, -1, -1):
        if j < t:
            product /= ratios[j]
        total += (-1) ** (t - j) * product
    return _require_integral(binom(n, m + t) * total, m, q, t)


def E_t1_closed(m: int, q: int, n: int) -> Fraction:
    """E(m,q,1,n) = ((n - m - qm - q)/(m + 1)) C(n, m)."""
    _check_mqt(m, q, 1)
    return Fraction((n - m - q * m - q) * binom(n, m), m + 1)


def classify_cell(m: int, q: int, t: int) -> ProofStatus:
    """First proved case that covers (m, q, t), in a fixed order."""
    _check_mqt(m, q, t)
    if m == 1:
        return ProofStatus.M1_CASE
    if t == 1:
        return ProofStatus.T1_LEMMA
    if t == q:
        return ProofStatus.T_EQ_Q_LEMMA
    if q <= m + t - 1:
        return ProofStatus.Q_SMALL
    if t <= 4:
        return ProofStatus.T_LE_4
    return ProofStatus.OPEN


@dataclass(frozen=True)
class EConjectureCell:
    m: int
    q: int
    t: int
    n: int
    E_value: int
    proof_status: ProofStatus
    holds: bool

    @property
    def key(self) -> CellKey:
        return (self.m, self.q, self.t)


def evaluate_cell(m: int, q: int, t: int, n: Optional[int] = None) -> EConjectureCell:
    """One cell, at n = mq + m + q unless n is given. Never raises on E < 0."""
    n = boundary_n(m, q) if n is None else n
    value = E(m, q, t, n)
    return EConjectureCell(
        m=m,
        q=q,
        t=t,
        n=n,
        E_value=value,
        proof_status=classify_cell(m, q, t),
        holds=value >= 0,
    )


def _evaluate_args(args: Tuple[int, int, int, int]) -> EConjectureCell:
    return evaluate_cell(*args)


def scan_keys(
    m_max: int, q_max: int, extra_n: int = 0, start: Optional[CellKey] = None
) -> List[Tuple[int, int, int, int]]:
    """(m, q, t, n) in canonical order, from ``start`` on when given."""
    keys = []
    for m in range(1, m_max + 1):
        for q in range(1, q_max + 1):
            for t in range(1, q + 1):
                if start is not None and (m, q, t) < tuple(start):
                    continue
                base = boundary_n(m, q)
                keys.extend((m, q, t, base + delta) for delta in range(extra_n + 1))
    return keys


def _check_sound(cell: EConjectureCell) -> None:
    if not cell.holds and cell.proof_status is not ProofStatus.OPEN:
        raise InvariantViolationError(
            f"E < 0 on a cell proved by {cell.proof_status.value}",
            details={
                "m": cell.m,
                "q": cell.q,
                "t": cell.t,
                "n": cell.n,
                "E": cell.E_value,
            },
        )


def conjecture_scan(
    m_max: int,
    q_max: int,
    extra_n: int = 0,
    start: Optional[CellKey] = None,
    workers: int = 1,
) -> Iterator[EConjectureCell]:
    """
    Stream E-cells for 1 <= m <= m_max and 1 <= t <= q <= q_max.

    Each (m, q, t) is evaluated at n = mq + m + q, and at the next ``extra_n``
    values of n when requested. Cells come out ordered by (m, q, t, n) whatever
    the worker count; ``start`` resumes a scan at a given (m, q, t).

    Raises:
        InvariantViolationError: when a cell with a proof status other than
            open has E < 0
    """
    if m_max < 1 or q_max < 1:
        raise PreconditionError(
            "Scan bounds must be at least 1", details={"m_max": m_max, "q_max": q_max}
        )
    if extra_n < 0 or workers < 1:
        raise PreconditionError(
            "extra_n must be >= 0 and workers >= 1",
            details={"extra_n": extra_n, "workers": workers},
        )

    keys = scan_keys(m_max, q_max, extra_n, start)
    logger.debug("E scan started", extra={"cells": len(keys), "workers": workers})

    if workers == 1:
        cells: Iterator[EConjectureCell] = map(_evaluate_args, keys)
        yield from _checked(cells)
        return

    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunksize = max(1, len(keys) // (workers * 8))
        yield from _checked(pool.map(_evaluate_args, keys, chunksize=chunksize))


def _checked(cells: Iterator[EConjectureCell]) -> Iterator[EConjectureCell]:
    for cell in cells:
        record_scan_cell(cell.proof_status.value, cell.holds)
        _check_sound(cell)
        if not cell.holds:
            logger.warning(
                "E-conjecture violation",
                extra={"m": cell.m, "q": cell.q, "t": cell.t, "n": cell.n},
            )
        yield cell
