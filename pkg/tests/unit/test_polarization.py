"""
Unit tests for polarization.
"""
from hypothesis import given, settings
from hypothesis import strategies as st

from qdepth.ideals import Monomial, MonomialIdeal, parse_ideal, polarize, polarize_pair


def test_polarization_example():
    result = polarize(parse_ideal("x1^2, x1*x2^2", 2))
    assert result.added == 2
    assert dict(result.var_map) == {(1, 2): 3, (2, 2): 4}
    assert set(result.polarized.masks) == {0b0101, 0b1011}
    assert str(result.polarized) == "x1*x3, x1*x2*x4"
    assert result.n_original == 2


def test_squarefree_ideal_is_unchanged():
    ideal = parse_ideal("x1*x2, x2*x3", 3)
    result = polarize(ideal)
    assert result.added == 0
    assert result.polarized == ideal


def test_replica_order_is_lexicographic():
    result = polarize(parse_ideal("x2^3, x1^2*x3", 3))
    assert dict(result.var_map) == {(1, 2): 4, (2, 2): 5, (2, 3): 6}
    assert result.polarized.n == 6


def test_unit_and_zero():
    assert polarize(MonomialIdeal.unit(2)).polarized.is_unit
    assert polarize(MonomialIdeal.zero(2)).polarized.is_zero


def test_pair_shares_variable_map():
    J = parse_ideal("x1", 2)
    I = parse_ideal("x1^3, x1*x2^2", 2)
    Jp, Ip = polarize_pair(J, I)
    assert Jp.var_map == Ip.var_map
    assert Jp.added == Ip.added == 3
    assert Jp.polarized.n == Ip.polarized.n == 5
    assert Ip.polarized.is_subideal_of(Jp.polarized)


ideals = st.lists(
    st.tuples(*[st.integers(0, 3)] * 3).filter(any).map(Monomial), min_size=1, max_size=4
).map(lambda gens: MonomialIdeal(3, tuple(gens)))


@settings(max_examples=50)
@given(ideals)
def test_polarized_ideal_is_squarefree_with_same_generator_count(ideal):
    result = polarize(ideal)
    assert result.polarized.squarefree
    assert result.polarized.m == ideal.m
    g = [max(gen.exponents[i] for gen in ideal.generators) for i in range(3)]
    assert result.added == sum(max(e - 1, 0) for e in g)


@settings(max_examples=50)
@given(ideals, ideals)
def test_pair_polarization_preserves_containment(a, b):
    inner = a.intersection(b)
    Jp, Ip = polarize_pair(a, inner)
    assert Ip.polarized.is_subideal_of(Jp.polarized)


@settings(max_examples=50)
@given(ideals)
def test_polarizing_twice_changes_nothing(ideal):
    once = polarize(ideal).polarized
    twice = polarize(once)
    assert twice.added == 0
    assert dict(twice.var_map) == {}
    assert twice.polarized == once
