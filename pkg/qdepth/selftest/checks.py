"""
Built-in selftest checks.

Golden checks pin published values exactly. Property checks draw random
instances from a ``random.Random`` seeded with QDEPTH_SEED; their case counts
are multiplied by SELFTEST_SCALE. Scan checks sweep fixed grids.
"""

import random
from typing import Any, Callable, Dict, List, Optional

from qdepth.config import BaseQDepthSettings
from qdepth.errors import SelftestFailedError
from qdepth.families import (
    E,
    E_falling_factorial,
    E_falling_factorial_reversed,
    E_rec_n,
    E_rec_q,
    E_t1_closed,
    ProofStatus,
    alpha_ratio,
    alpha_ratio_bounds,
    alpha_veronese,
    boundary_n,
    ci_qdepth,
    ci_symmetry,
    classify_cell,
    complete_intersection,
    conjecture_scan,
    gamma,
    qdepth_veronese,
    random_complete_intersection,
    random_monomial_ideal,
    random_quotient_pair,
    random_squarefree_ideal,
    veronese_critical_betas,
    veronese_ideal,
    veronese_region_scan,
)
from qdepth.ideals import Monomial, MonomialIdeal, parse_ideal, polarize
from qdepth.invariants import (
    beta_closed,
    beta_table,
    check_colon_invariance,
    check_colon_sequence_bound,
    check_disjoint_union_bound,
    check_extension_shift,
    check_multiplication_invariance,
    check_regular_sandwich,
    check_short_exact_bound,
    iter_beta,
    lemma_kkk_table,
    qdepth,
    qdepth_ideal,
    qdepth_quotient,
    verify_roundtrip,
)
from qdepth.numeric import binom
from qdepth.oracle import sdepth
from qdepth.poset import (
    AlphaMode,
    AlphaVector,
    SubsetPoset,
    alpha_by_inclusion_exclusion,
    alpha_vector,
    build_poset,
)
from qdepth.selftest.registry import SelftestCheck, SelftestRegistry

GOLDEN = "golden"
PROPERTY = "property"
SCAN = "scan"
ORACLE = "oracle"


def _expect(label: str, actual: Any, expected: Any) -> None:
    if actual != expected:
        raise SelftestFailedError(
            f"{label}: expected {expected}, got {actual}",
            details={"check": label, "expected": repr(expected), "actual": repr(actual)},
        )


def _count(base: int, settings: BaseQDepthSettings) -> int:
    return max(1, round(base * settings.SELFTEST_SCALE))


# Golden values


def polarization_example() -> Dict[str, Any]:
    ideal = parse_ideal("x1^2, x1*x2^2", 2)
    result = polarize(ideal)
    _expect("polarized generators", set(result.polarized.masks), {0b0101, 0b1011})
    _expect("added variables", result.added, 2)
    _expect("replica map", dict(result.var_map), {(1, 2): 3, (2, 2): 4})
    return {"polarized": str(result.polarized)}


def alpha_beta_example() -> Dict[str, Any]:
    polarized = polarize(parse_ideal("x1^2, x1*x2^2", 2)).polarized
    alpha = alpha_by_inclusion_exclusion(polarized, AlphaMode.QUOTIENT)
    _expect("α by inclusion-exclusion", alpha.counts, (1, 4, 5, 1, 0))
    poset = build_poset(MonomialIdeal.unit(4), polarized)
    _expect("α by enumeration", alpha_vector(poset).counts, (1, 4, 5, 1, 0))
    _expect("β at d=2", beta_table(alpha, 2).entries, (1, 2, 2))
    _expect("β at d=3", beta_table(alpha, 3).entries, (1, 1, 0, -1))
    value = qdepth_quotient(parse_ideal("x1^2, x1*x2^2", 2)).value
    _expect("qdepth(S/I)", value, 0)
    return {"qdepth": value}


def path_ideal_example() -> Dict[str, Any]:
    ideal = parse_ideal("x1*x2, x2*x3, x3*x4, x4*x5", 6)
    x6 = Monomial.from_indices([6], 6)
    shifted = ideal.multiply(x6)
    _expect("qdepth(S/I)", qdepth_quotient(ideal).value, 3)
    _expect("qdepth(S/x6 I)", qdepth_quotient(shifted).value, 4)
    _expect("qdepth(I)", qdepth_ideal(ideal).value, 5)
    _expect("qdepth(x6 I)", qdepth_ideal(shifted).value, 5)
    return {}


def pentagon_example() -> Dict[str, Any]:
    inner = parse_ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x1", 6)
    outer = parse_ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x1*x6", 6)
    _expect("J : x6", outer.colon(Monomial.from_indices([6], 6)), inner)
    _expect("qdepth(I)", qdepth_ideal(inner).value, 5)
    _expect("qdepth(J)", qdepth_ideal(outer).value, 4)
    return {}


def regular_element_example() -> Dict[str, Any]:
    small = (
        parse_ideal("x1, x2", 7)
        .intersection(parse_ideal("x3, x4", 7))
        .intersection(parse_ideal("x5, x6, x7", 7))
    )
    _expect("generators of I'", small.m, 12)
    _expect("qdepth(S'/I')", qdepth_quotient(small).value, 3)
    big = small.extend(2).add_generator(Monomial.from_indices([8, 9], 9))
    _expect("qdepth(S/(I,u))", qdepth_quotient(big).value, 5)
    return {}


def ci_mixed_degree_example() -> Dict[str, Any]:
    ideal = parse_ideal("x1, x2, x3, x4, x5*x6, x7*x8", 8)
    _expect("qdepth(I)", qdepth_ideal(ideal).value, 6)
    _expect("qdepth(S/I)", ci_qdepth(8, [1, 1, 1, 1, 2, 2]), 2)
    _expect("all-linear CI", ci_qdepth(5, [1] * 5), 0)
    return {}


def veronese_examples() -> Dict[str, Any]:
    _expect("J_{4,2} generators", veronese_ideal(4, 2).m, 6)
    _expect("α(S/J_{4,2})", alpha_veronese(4, 2, AlphaMode.QUOTIENT).counts, (1, 4, 0, 0, 0))
    _expect("α(J_{4,2})", alpha_veronese(4, 2, AlphaMode.IDEAL).counts, (0, 0, 6, 4, 1))
    _expect("qdepth(J_{4,2})", qdepth_veronese(4, 2).value, 2)
    for n in range(1, 11):
        _expect(f"qdepth(m) in {n} variables", qdepth_veronese(n, 1).value, (n + 1) // 2)
    return {}


def e_examples() -> Dict[str, Any]:
    _expect("E(2,1,1,5)", E(2, 1, 1, 5), 0)
    _expect("classify (2,9,5)", classify_cell(2, 9, 5), ProofStatus.OPEN)
    _expect("classify (3,4,4)", classify_cell(3, 4, 4), ProofStatus.T_EQ_Q_LEMMA)
    _expect("classify (1,7,3)", classify_cell(1, 7, 3), ProofStatus.M1_CASE)
    report = ci_symmetry(2, [1, 1])
    _expect("β at d=1 for n=2, degs=[1,1]", report.checks[0].entries, (1, -1))
    _expect("symmetric at d=1", report.checks[0].symmetric, True)
    return {}


# Randomized properties


def _random_alpha(rng: random.Random) -> AlphaVector:
    n = rng.randint(0, 10)
    return AlphaVector(n, tuple(rng.randint(0, binom(n, k)) for k in range(n + 1)))


def make_alpha_beta_property(rng: random.Random, count: int) -> Callable[[], Dict[str, Any]]:
    def check() -> Dict[str, Any]:
        for _ in range(count):
            alpha = _random_alpha(rng)
            d = rng.randint(0, alpha.n + 2)
            table = beta_table(alpha, d)
            verify_roundtrip(table)
            closed = tuple(beta_closed(alpha, d, k) for k in range(d + 1))
            _expect("recursion vs closed form", table.entries, closed)
            _expect("lazy vs table", tuple(iter_beta(alpha, d)), table.entries)
        return {"cases": count}

    return check


def make_inclusion_exclusion_property(
    rng: random.Random, count: int
) -> Callable[[], Dict[str, Any]]:
    def check() -> Dict[str, Any]:
        for _ in range(count):
            n = rng.randint(1, 6)
            ideal = random_squarefree_ideal(rng, n)
            quotient = alpha_vector(build_poset(MonomialIdeal.unit(n), ideal))
            module = alpha_vector(build_poset(ideal, MonomialIdeal.zero(n)))
            _expect(
                f"α(S/I) for {ideal}",
                alpha_by_inclusion_exclusion(ideal, AlphaMode.QUOTIENT),
                quotient,
            )
            _expect(
                f"α(I) for {ideal}",
                alpha_by_inclusion_exclusion(ideal, AlphaMode.IDEAL),
                module,
            )
        return {"cases": count}

    return check


def make_extension_property(rng: random.Random, count: int) -> Callable[[], Dict[str, Any]]:
    def check() -> Dict[str, Any]:
        for _ in range(count):
            J, I = random_quotient_pair(rng, rng.randint(1, 5))
            check_extension_shift(J, I)
        return {"cases": count}

    return check


def _random_disjoint_posets(rng: random.Random):
    n = rng.randint(1, 5)
    masks = rng.sample(range(1 << n), rng.randint(2, 1 << n))
    cut = rng.randint(1, len(masks) - 1)
    return SubsetPoset.from_masks(n, masks[:cut]), SubsetPoset.from_masks(n, masks[cut:])


def make_lower_bound_property(rng: random.Random, count: int) -> Callable[[], Dict[str, Any]]:
    def check() -> Dict[str, Any]:
        for _ in range(count):
            check_disjoint_union_bound(*_random_disjoint_posets(rng))
            n = rng.randint(2, 5)
            J, I = random_quotient_pair(rng, n)
            while J.is_unit:
                J, I = random_quotient_pair(rng, n)
            check_short_exact_bound(J, I)
        return {"cases": count}

    return check


def make_regular_element_property(
    rng: random.Random, count: int
) -> Callable[[], Dict[str, Any]]:
    def check() -> Dict[str, Any]:
        variable_cases = 0
        for _ in range(count):
            n = rng.randint(2, 7)
            free = rng.randint(1, n - 1)
            small = random_squarefree_ideal(rng, n - free, max_degree=3)
            ideal = small.extend(free)
            size = rng.randint(1, free)
            u = Monomial.from_indices(rng.sample(range(n - free + 1, n + 1), size), n)
            variable_cases += size == 1
            check_regular_sandwich(ideal, u)
            kkk = lemma_kkk_table(small, free, rng.randint(0, n - free))
            _expect(
                "regular-element β formula",
                kkk.entries,
                beta_table(kkk.source_alpha, kkk.d).entries,
            )
        return {"cases": count, "single_variable_cases": variable_cases}

    return check


def make_colon_property(rng: random.Random, count: int) -> Callable[[], Dict[str, Any]]:
    def check() -> Dict[str, Any]:
        for _ in range(count):
            n = rng.randint(2, 4)
            base = random_squarefree_ideal(rng, n, max_gens=3, max_degree=2)
            u = Monomial(tuple(rng.randint(0, 2) for _ in range(n)))
            if u.is_unit:
                continue
            check_colon_invariance(base.multiply(u), u)
        return {"cases": count}

    return check


def make_multiplication_property(
    rng: random.Random, count: int
) -> Callable[[], Dict[str, Any]]:
    def check() -> Dict[str, Any]:
        for _ in range(count):
            k = rng.randint(1, 2)
            ideal = random_squarefree_ideal(rng, rng.randint(1, 6 - k), max_degree=3)
            check_multiplication_invariance(ideal, k)
        return {"cases": count}

    return check


def make_colon_sequence_property(
    rng: random.Random, count: int
) -> Callable[[], Dict[str, Any]]:
    def check() -> Dict[str, Any]:
        skipped = 0
        for i in range(count):
            if i % 2 == 0:
                ideal = random_squarefree_ideal(rng, rng.randint(2, 6), max_degree=3)
                top = 1
            else:
                ideal = random_monomial_ideal(rng, rng.randint(2, 3), max_exponent=2)
                top = 2
            u = Monomial(tuple(rng.randint(0, top) for _ in range(ideal.n)))
            if ideal.contains(u):
                skipped += 1
                continue
            check_colon_sequence_bound(ideal, u)
        return {"cases": count - skipped, "skipped": skipped}

    return check


def make_ci_property(rng: random.Random, count: int) -> Callable[[], Dict[str, Any]]:
    def check() -> Dict[str, Any]:
        for i in range(count):
            n, degs = random_complete_intersection(rng, 12, full_support=i % 2 == 0)
            _expect(f"qdepth(S/CI) n={n} degs={degs}", ci_qdepth(n, degs), n - len(degs))
            report = ci_symmetry(n, degs)
            if sum(degs) == n:
                _expect("endpoint", report.endpoint, -1)
            ideal = complete_intersection(n, degs)
            _expect("CI via generators", qdepth_quotient(ideal).value, n - len(degs))
        return {"cases": count}

    return check


def make_oracle_property(rng: random.Random, count: int) -> Callable[[], Dict[str, Any]]:
    def check() -> Dict[str, Any]:
        for _ in range(count):
            J, I = random_quotient_pair(rng, rng.randint(1, 6))
            s, q = sdepth(J, I).value, qdepth(J, I).value
            if s > q:
                raise SelftestFailedError(
                    "sdepth exceeds qdepth",
                    details={"J": str(J), "I": str(I), "sdepth": s, "qdepth": q},
                )
        for n in range(1, 7):
            maximal = veronese_ideal(n, 1)
            _expect(
                f"sdepth(m) in {n} variables",
                sdepth(maximal, MonomialIdeal.zero(n)).value,
                (n + 1) // 2,
            )
        for _ in range(max(1, count // 10)):
            n, degs = random_complete_intersection(rng, 6)
            ideal = complete_intersection(n, degs)
            _expect(
                f"sdepth(S/CI) n={n} degs={degs}",
                sdepth(MonomialIdeal.unit(n), ideal).value,
                n - len(degs),
            )
        return {"cases": count}

    return check


# Grids and scans


def e_machinery_grid() -> Dict[str, Any]:
    cells = 0
    for m in range(1, 5):
        for q in range(1, 9):
            base = boundary_n(m, q)
            for t in range(1, q + 1):
                for n in (base, base + 3):
                    value = E(m, q, t, n)
                    if q > t >= 2:
                        _expect(f"E_rec_q{(m, q, t, n)}", E_rec_q(m, q, t, n), value)
                    if m >= 2:
                        _expect(f"E_rec_n{(m, q, t, n)}", E_rec_n(m, q, t, n), value)
                    cells += 1
                value = E(m, q, t, base)
                _expect(f"falling factorial{(m, q, t)}", E_falling_factorial(m, q, t), value)
                _expect(
                    f"reversed falling factorial{(m, q, t)}",
                    E_falling_factorial_reversed(m, q, t),
                    value,
                )
                if t == 1:
                    _expect(f"t=1 boundary{(m, q)}", value, 0)
                    _expect(
                        f"t=1 closed form{(m, q)}",
                        E_t1_closed(m, q, base + 3),
                        E(m, q, 1, base + 3),
                    )
                _expect(f"Γ(t){(m, q, t)}", gamma(m, q, t, t, base), binom(base, m + t))
                ratios = [alpha_ratio(m, q, t, j) for j in range(t)]
                _expect(f"ratio(0){(m, q, t)}", ratios[0], t)
                _expect(f"ratios non-increasing{(m, q, t)}", ratios, sorted(ratios, reverse=True))
                if t >= 2:
                    for j, ratio in enumerate(ratios):
                        if ratio not in alpha_ratio_bounds(m, q, t, j):
                            raise SelftestFailedError(
                                "Ratio outside its proved bounds",
                                details={"m": m, "q": q, "t": t, "j": j},
                            )
        for n in range(2 * m + 1, boundary_n(m, 8) + 1):
            veronese_critical_betas(n, m)
    return {"cells": cells}


def veronese_quotient_grid() -> Dict[str, Any]:
    cases = 0
    for n in range(1, 13):
        for m in range(1, n + 1):
            _expect(f"qdepth(S/J_{{{n},{m}}})", qdepth_veronese(n, m).quotient_value, m - 1)
            cases += 1
    return {"cases": cases}


def veronese_region() -> Dict[str, Any]:
    results = list(veronese_region_scan(6))
    return {"cases": len(results)}


def e_conjecture_scan() -> Dict[str, Any]:
    cells = list(conjecture_scan(6, 12))
    violations = [c.key for c in cells if not c.holds]
    _expect("E-conjecture violations", violations, [])
    open_cells = sum(1 for c in cells if c.proof_status is ProofStatus.OPEN)
    return {"cells": len(cells), "open": open_cells}


def build_registry(settings: BaseQDepthSettings) -> SelftestRegistry:
    """
    Register every built-in check. Randomized checks each get their own
    generator derived from QDEPTH_SEED, so selecting by tag does not change
    the instances drawn.
    """
    registry = SelftestRegistry()
    seed = settings.QDEPTH_SEED

    def rng(offset: int) -> random.Random:
        return random.Random(seed * 1000 + offset)

    golden = [
        ("polarization-example", polarization_example),
        ("alpha-beta-example", alpha_beta_example),
        ("path-ideal-example", path_ideal_example),
        ("pentagon-example", pentagon_example),
        ("regular-element-example", regular_element_example),
        ("ci-mixed-degree-example", ci_mixed_degree_example),
        ("veronese-examples", veronese_examples),
        ("e-examples", e_examples),
    ]
    for name, func in golden:
        registry.register(SelftestCheck(name, func, tags=[GOLDEN]))

    properties: List = [
        ("alpha-beta-roundtrip", make_alpha_beta_property, 500, []),
        ("inclusion-exclusion", make_inclusion_exclusion_property, 200, []),
        ("extension-shift", make_extension_property, 100, []),
        ("lower-bounds", make_lower_bound_property, 100, []),
        ("regular-element", make_regular_element_property, 100, []),
        ("colon-invariance", make_colon_property, 50, []),
        ("complete-intersections", make_ci_property, 200, []),
        ("oracle-consistency", make_oracle_property, 300, [ORACLE]),
        ("multiplication-invariance", make_multiplication_property, 100, []),
        ("colon-sequence", make_colon_sequence_property, 100, []),
    ]
    for offset, (name, factory, base, extra_tags) in enumerate(properties):
        check = factory(rng(offset), _count(base, settings))
        registry.register(SelftestCheck(name, check, tags=[PROPERTY, *extra_tags]))

    scans = [
        ("e-machinery-grid", e_machinery_grid),
        ("veronese-quotient-grid", veronese_quotient_grid),
        ("veronese-theorem-region", veronese_region),
        ("e-conjecture-scan", e_conjecture_scan),
    ]
    for name, func in scans:
        registry.register(SelftestCheck(name, func, tags=[SCAN]))
    return registry


def run_selftest(
    settings: BaseQDepthSettings, tags: Optional[List[str]] = None
) -> Dict[str, Any]:
    """Build the registry and run it; raises nothing, failures are in the result."""
    return build_registry(settings).run_all(tags)
