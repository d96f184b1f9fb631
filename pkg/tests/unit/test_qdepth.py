"""
Unit tests for quasi depth: published values, witnesses and blockers,
polarization and the general lower bounds.
"""
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdepth.errors import AmbientMismatchError, EmptyPosetError, NotContainedError, NotSquarefreeError
from qdepth.families import random_monomial_ideal, random_squarefree_ideal
from qdepth.ideals import Monomial, MonomialIdeal, parse_ideal
from qdepth.invariants import (
    qdepth,
    qdepth_alpha,
    qdepth_ideal,
    qdepth_lower_bounds,
    qdepth_poset,
    qdepth_quotient,
    qdepth_squarefree,
)
from qdepth.poset import AlphaVector, SubsetPoset

PATH = "x1*x2, x2*x3, x3*x4, x4*x5"
PENTAGON = "x1*x2, x2*x3, x3*x4, x4*x5, x5*x1"


def test_non_squarefree_example():
    report = qdepth_quotient(parse_ideal("x1^2, x1*x2^2", 2))
    assert report.value == 0
    assert report.n_added == 2
    assert report.n_effective == 4
    assert report.alpha.counts == (1, 4, 5, 1, 0)
    assert report.witness.d == 2
    assert report.witness.entries == (1, 2, 2)
    assert (report.blocker.d, report.blocker.k, report.blocker.value) == (3, 3, -1)


def test_path_ideal():
    ideal = parse_ideal(PATH, 6)
    shifted = ideal.multiply(Monomial.from_indices([6], 6))
    assert qdepth_quotient(ideal).value == 3
    assert qdepth_quotient(shifted).value == 4
    assert qdepth_ideal(ideal).value == 5
    assert qdepth_ideal(shifted).value == 5


def test_pentagon():
    assert qdepth_ideal(parse_ideal(PENTAGON, 6)).value == 5
    assert qdepth_ideal(parse_ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x1*x6", 6)).value == 4


def test_regular_element_example():
    small = (
        parse_ideal("x1, x2", 7)
        .intersection(parse_ideal("x3, x4", 7))
        .intersection(parse_ideal("x5, x6, x7", 7))
    )
    assert qdepth_quotient(small).value == 3
    big = small.extend(2).add_generator(Monomial.from_indices([8, 9], 9))
    assert qdepth_quotient(big).value == 5


def test_linear_and_quadratic_ci():
    ideal = parse_ideal("x1, x2, x3, x4, x5*x6, x7*x8", 8)
    assert qdepth_ideal(ideal).value == 6
    assert qdepth_quotient(ideal).value == 2


def test_maximal_ideal():
    for n in range(1, 9):
        maximal = MonomialIdeal.from_masks([1 << i for i in range(n)], n)
        assert qdepth_ideal(maximal).value == (n + 1) // 2
        assert qdepth_quotient(maximal).value == 0


def test_pair_module():
    J = parse_ideal("x1", 2)
    I = parse_ideal("x1*x2", 2)
    # P_{J/I} = {{1}}
    assert qdepth(J, I).value == 1


def test_witness_is_nonnegative_and_blocker_negative():
    report = qdepth_ideal(parse_ideal(PATH, 6))
    assert report.witness.is_nonnegative
    assert report.witness.d == report.value + report.n_added
    assert report.blocker.value < 0
    assert report.blocker.d == report.witness.d + 1


def test_no_blocker_at_top():
    report = qdepth_alpha(AlphaVector.boolean(3))
    assert report.value == 3
    assert report.blocker is None


def test_poset_depends_only_on_alpha():
    a = SubsetPoset.from_masks(3, [0b001, 0b011])
    b = SubsetPoset.from_masks(3, [0b100, 0b110])
    assert qdepth_poset(a).value == qdepth_poset(b).value == 2


def test_errors():
    ideal = parse_ideal("x1", 2)
    with pytest.raises(EmptyPosetError) as exc:
        qdepth(ideal, ideal)
    assert exc.value.exit_code == 3
    with pytest.raises(NotContainedError):
        qdepth(parse_ideal("x1*x2", 2), ideal)
    with pytest.raises(AmbientMismatchError):
        qdepth(ideal, parse_ideal("x1", 3))
    with pytest.raises(NotSquarefreeError):
        qdepth_squarefree(MonomialIdeal.unit(2), parse_ideal("x1^2", 2))
    with pytest.raises(EmptyPosetError):
        qdepth_alpha(AlphaVector(2, (0, 0, 0)))


def test_zero_ideal_quotient_is_full_ring():
    assert qdepth_quotient(MonomialIdeal.zero(4)).value == 4


def test_lower_bounds_formula():
    assert qdepth_lower_bounds(parse_ideal(PATH, 6)) == (2, 4)
    assert qdepth_lower_bounds(parse_ideal("x1", 1)) == (0, 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_lower_bounds_hold(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 7)
    ideal = random_squarefree_ideal(rng, n)
    quotient_bound, ideal_bound = qdepth_lower_bounds(ideal)
    assert qdepth_quotient(ideal).value >= quotient_bound
    assert qdepth_ideal(ideal).value >= ideal_bound


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_general_ideals_through_polarization(seed):
    rng = random.Random(seed)
    ideal = random_monomial_ideal(rng, rng.randint(1, 3), max_exponent=2, max_gens=3)
    report = qdepth_quotient(ideal)
    assert 0 <= report.value <= ideal.n
    assert report.n_effective == ideal.n + report.n_added
