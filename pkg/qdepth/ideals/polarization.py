"""
Polarization of monomial ideals.

x_i^a becomes x_i * x_{(i,2)} * ... * x_{(i,a)}. Original variables keep
indices 1..n; the replica (i, j), 2 <= j <= g_i, gets index n + 1, n + 2, ...
in lexicographic (i, j) order, where g is the exponent-wise lcm of all
generators involved.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Tuple

from qdepth.errors import AmbientMismatchError
from qdepth.ideals.ideal import MonomialIdeal
from qdepth.ideals.monomial import Monomial


@dataclass(frozen=True)
class PolarizationResult:
    """
    Attributes:
        polarized: Squarefree ideal in n + added variables
        added: N, the number of new variables
        var_map: (original index i, replica j >= 2) -> new 1-based index
    """

    polarized: MonomialIdeal
    added: int
    var_map: Mapping[Tuple[int, int], int]

    @property
    def n_original(self) -> int:
        return self.polarized.n - self.added


def joint_lcm_exponents(ideals: Iterable[MonomialIdeal], n: int) -> Tuple[int, ...]:
    """g: the exponent-wise maximum over every generator of every ideal."""
    g = [0] * n
    for ideal in ideals:
        if ideal.n != n:
            raise AmbientMismatchError(
                f"Ideals live in {ideal.n} and {n} variables",
                details={"expected": n, "actual": ideal.n},
            )
        for gen in ideal.generators:
            for i, e in enumerate(gen.exponents):
                if e > g[i]:
                    g[i] = e
    return tuple(g)


def replica_map(g: Tuple[int, ...]) -> Dict[Tuple[int, int], int]:
    index = len(g)
    mapping: Dict[Tuple[int, int], int] = {}
    for i, gi in enumerate(g, start=1):
        for j in range(2, gi + 1):
            index += 1
            mapping[(i, j)] = index
    return mapping


def _polarize_monomial(
    u: Monomial, var_map: Mapping[Tuple[int, int], int], n_total: int
) -> Monomial:
    exponents = [0] * n_total
    for i, a in enumerate(u.exponents, start=1):
        if a >= 1:
            exponents[i - 1] = 1
        for j in range(2, a + 1):
            exponents[var_map[(i, j)] - 1] = 1
    return Monomial(tuple(exponents))


def _polarize_against(
    ideal: MonomialIdeal, g: Tuple[int, ...]
) -> PolarizationResult:
    var_map = replica_map(g)
    added = len(var_map)
    n_total = ideal.n + added
    polarized = MonomialIdeal(
        n_total,
        tuple(_polarize_monomial(u, var_map, n_total) for u in ideal.generators),
    )
    return PolarizationResult(polarized=polarized, added=added, var_map=var_map)


def polarize(ideal: MonomialIdeal) -> PolarizationResult:
    """Polarize a single ideal against the lcm of its own generators."""
    return _polarize_against(ideal, joint_lcm_exponents([ideal], ideal.n))


def polarize_pair(
    J: MonomialIdeal, I: MonomialIdeal
) -> Tuple[PolarizationResult, PolarizationResult]:
    """
    Polarize J and I against their joint g, so I^p ⊆ J^p whenever I ⊆ J.

    Returns:
        (J^p, I^p) sharing the same variable map and N
    """
    g = joint_lcm_exponents([J, I], J.n)
    return _polarize_against(J, g), _polarize_against(I, g)
