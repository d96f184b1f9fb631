"""
Seeded random instances shared by the selftest and the test suite.

Every function takes a ``random.Random`` so a run is reproducible from
QDEPTH_SEED alone.
"""

import random
from typing import Optional, Tuple

from qdepth.errors import PreconditionError
from qdepth.ideals import Monomial, MonomialIdeal


def _composition(rng: random.Random, total: int, parts: int) -> Tuple[int, ...]:
    """A uniformly random ordered split of ``total`` into ``parts`` positive integers."""
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    bounds = [0, *cuts, total]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def random_complete_intersection(
    rng: random.Random,
    n_max: int,
    m_max: Optional[int] = None,
    full_support: bool = False,
) -> Tuple[int, Tuple[int, ...]]:
    """
    Draw (n, degs) for a squarefree complete intersection with n <= n_max.

    With ``full_support`` the degrees sum to n, otherwise to any value in 1..n.
    """
    if n_max < 1:
        raise PreconditionError("n_max must be at least 1", details={"n_max": n_max})
    n = rng.randint(1, n_max)
    total = n if full_support else rng.randint(1, n)
    m_top = total if m_max is None else min(total, m_max)
    m = rng.randint(1, m_top)
    return n, _composition(rng, total, m)


def random_squarefree_ideal(
    rng: random.Random,
    n: int,
    max_gens: Optional[int] = None,
    max_degree: Optional[int] = None,
) -> MonomialIdeal:
    """A nonzero squarefree ideal whose generators have degree 1..max_degree."""
    if n < 1:
        raise PreconditionError("n must be at least 1", details={"n": n})
    max_degree = n if max_degree is None else min(max_degree, n)
    count = rng.randint(1, max_gens or n + 1)
    gens = []
    for _ in range(count):
        size = rng.randint(1, max_degree)
        gens.append(Monomial.from_indices(rng.sample(range(1, n + 1), size), n))
    return MonomialIdeal(n, tuple(gens))


def random_monomial_ideal(
    rng: random.Random, n: int, max_exponent: int = 3, max_gens: int = 4
) -> MonomialIdeal:
    """A nonzero ideal with exponents in 0..max_exponent and no unit generator."""
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exponents = [rng.randint(0, max_exponent) for _ in range(n)]
        if not any(exponents):
            exponents[rng.randrange(n)] = 1
        gens.append(Monomial(tuple(exponents)))
    return MonomialIdeal(n, tuple(gens))


def random_quotient_pair(
    rng: random.Random, n: int, max_degree: Optional[int] = None
) -> Tuple[MonomialIdeal, MonomialIdeal]:
    """
    (J, I) squarefree with I ⊊ J: either J = S, or J is I plus one or two
    generators outside I.
    """
    ideal = random_squarefree_ideal(rng, n, max_degree=max_degree)
    if rng.random() < 0.4:
        return MonomialIdeal.unit(n), ideal
    outer = ideal
    for _ in range(rng.randint(1, 2)):
        mask = rng.randrange(1, 1 << n)
        if not outer.contains_mask(mask):
            outer = outer.add_generator(Monomial.from_mask(mask, n))
    if outer == ideal:
        return MonomialIdeal.unit(n), ideal
    return outer, ideal
