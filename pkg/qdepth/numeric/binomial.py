"""Exact binomial coefficients and falling factorials."""

import math
from fractions import Fraction
from typing import List, Union

from qdepth.cache import cache
from qdepth.errors import PreconditionError

Number = Union[int, Fraction]


@cache(prefix="binom")
def _comb(a: int, b: int) -> int:
    return math.comb(a, b)


def binom(a: int, b: int) -> int:
    """
    Binomial coefficient C(a, b) with the zero convention.

    Returns 0 when b < 0, a < 0 or b > a; otherwise the exact integer.
    """
    if b < 0 or a < 0 or b > a:
        return 0
    return _comb(a, b)


def binom_row(n: int) -> List[int]:
    """Return ``[C(n,0), ..., C(n,n)]``."""
    return [binom(n, k) for k in range(n + 1)]


def falling_factorial(x: Number, j: int) -> Number:
    """(x)_j = x(x-1)...(x-j+1); (x)_0 = 1."""
    if j < 0:
        raise PreconditionError("j must be non-negative", details={"j": j})
    return math.prod((x - i for i in range(j)), start=1)
