"""
Unit tests for characteristic posets and intervals.
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdepth.errors import (
    AmbientMismatchError,
    NotContainedError,
    NotSquarefreeError,
    PosetTooLargeError,
    PreconditionError,
)
from qdepth.ideals import MonomialIdeal, parse_ideal
from qdepth.poset import (
    Interval,
    SubsetPoset,
    build_poset,
    indices_to_mask,
    mask_to_indices,
    popcount,
)


def test_mask_helpers():
    assert popcount(0b1011) == 3
    assert mask_to_indices(0b1011) == [1, 2, 4]
    assert indices_to_mask([1, 2, 4]) == 0b1011
    assert mask_to_indices(0) == []


class TestInterval:
    def test_members(self):
        interval = Interval(0b001, 0b101)
        assert sorted(interval) == [0b001, 0b101]
        assert len(interval) == 2
        assert 0b101 in interval
        assert 0b100 not in interval
        assert (interval.lower_size, interval.upper_size) == (1, 2)

    def test_lower_must_be_inside_upper(self):
        with pytest.raises(PreconditionError):
            Interval(0b010, 0b101)


class TestSubsetPoset:
    def test_members_sorted_by_rank(self):
        poset = SubsetPoset.from_masks(3, [0b111, 0b001, 0b110, 0b010])
        assert poset.members == (0b001, 0b010, 0b110, 0b111)
        assert poset.by_rank == ((), (0b001, 0b010), (0b110,), (0b111,))
        assert len(poset) == 4
        assert 0b110 in poset

    def test_member_outside_ground_set(self):
        with pytest.raises(PreconditionError):
            SubsetPoset.from_masks(2, [0b100])

    def test_duplicates_rejected(self):
        with pytest.raises(PreconditionError):
            SubsetPoset(2, (1, 1))

    def test_union_and_difference(self):
        a = SubsetPoset.from_masks(2, [0b00, 0b01])
        b = SubsetPoset.from_masks(2, [0b11])
        assert a.union(b).members == (0b00, 0b01, 0b11)
        assert a.union(b).difference(b) == a
        with pytest.raises(PreconditionError):
            a.union(a)
        with pytest.raises(AmbientMismatchError):
            a.union(SubsetPoset.from_masks(3, [0b100]))

    def test_contains_interval(self):
        poset = SubsetPoset.boolean_lattice(3)
        assert len(poset) == 8
        assert poset.contains_interval(Interval(0, 0b111))


class TestBuildPoset:
    def test_quotient_poset(self):
        # S/(x1*x2) over 3 variables: subsets not containing {1, 2}
        poset = build_poset(MonomialIdeal.unit(3), parse_ideal("x1*x2", 3))
        assert set(poset) == {0b000, 0b001, 0b010, 0b100, 0b101, 0b110}

    def test_ideal_poset(self):
        poset = build_poset(parse_ideal("x1, x2", 2), MonomialIdeal.zero(2))
        assert set(poset) == {0b01, 0b10, 0b11}

    def test_pair_poset(self):
        poset = build_poset(parse_ideal("x1", 2), parse_ideal("x1*x2", 2))
        assert set(poset) == {0b01}

    def test_equal_ideals_give_empty_poset(self):
        ideal = parse_ideal("x1", 2)
        assert build_poset(ideal, ideal).is_empty

    def test_requires_squarefree(self):
        with pytest.raises(NotSquarefreeError):
            build_poset(MonomialIdeal.unit(2), parse_ideal("x1^2", 2))

    def test_requires_containment(self):
        with pytest.raises(NotContainedError):
            build_poset(parse_ideal("x1*x2", 2), parse_ideal("x1", 2))

    def test_ambient_mismatch(self):
        with pytest.raises(AmbientMismatchError):
            build_poset(MonomialIdeal.unit(2), parse_ideal("x1", 3))

    def test_enumeration_cap(self, monkeypatch):
        with pytest.raises(PosetTooLargeError) as exc:
            build_poset(MonomialIdeal.unit(6), parse_ideal("x1", 6), max_n=5)
        assert exc.value.exit_code == 4
        monkeypatch.setenv("QDEPTH_MAX_N", "4")
        with pytest.raises(PosetTooLargeError):
            build_poset(MonomialIdeal.unit(5), parse_ideal("x1", 5))


@st.composite
def squarefree_ideals(draw, n):
    masks = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=4))
    return MonomialIdeal.from_masks(masks, n)


@st.composite
def nested_squarefree_pairs(draw):
    n = draw(st.integers(1, 6))
    J = draw(squarefree_ideals(n))
    # J ∩ K lies in J and stays squarefree
    I = J.intersection(draw(squarefree_ideals(n)))
    return J, I


@settings(max_examples=60, deadline=None)
@given(nested_squarefree_pairs())
def test_pair_poset_is_set_difference(pair):
    J, I = pair
    zero = MonomialIdeal.zero(J.n)
    assert set(build_poset(J, I)) == set(build_poset(J, zero)) - set(build_poset(I, zero))
