"""History spaces, subset algebra, and the group of coefficient vectors."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sumrules.errors import CapExceededError, SpaceMismatchError
from sumrules.histories import (HistorySpace, characteristic_function,
                                ones)

SPACE = HistorySpace.of_size(3)

coeff = st.fractions(min_value=-3, max_value=3, max_denominator=4)
elements = st.lists(coeff, min_size=3, max_size=3).map(SPACE.element)


def test_space_validation():
    with pytest.raises(ValueError):
        HistorySpace(())
    with pytest.raises(ValueError):
        HistorySpace(("a", "a"))
    with pytest.raises(CapExceededError):
        HistorySpace.of_size(25)
    assert HistorySpace.of_size(24).size == 24


def test_labels_and_indexing():
    space = HistorySpace(("up", "down"))
    assert space.index("down") == 1
    with pytest.raises(KeyError):
        space.index("sideways")
    assert space.subset(["up"]).indices() == (0,)
    assert space.subset([1]).label_list() == ["down"]


def test_characteristic_function_of_empty_set_is_zero():
    assert characteristic_function(SPACE.empty()) == SPACE.zero()


def test_disjoint_characteristic_functions_add():
    a = SPACE.subset([0])
    b = SPACE.subset([1, 2])
    assert (characteristic_function(a) + characteristic_function(b)
            == characteristic_function(a | b))


def test_overlapping_characteristic_sum_counts_multiplicity():
    a = SPACE.subset([0, 1])
    b = SPACE.subset([1, 2])
    total = characteristic_function(a) + characteristic_function(b)
    assert total.coeffs == (1, 2, 1)


def test_disjoint_union_identity_exhaustive_m6():
    space = HistorySpace.of_size(6)
    for a in space.all_subsets():
        complement_bits = a.complement().bits
        b_bits = complement_bits
        while True:
            b = space.subset_from_bits(b_bits)
            assert (characteristic_function(a) + characteristic_function(b)
                    == characteristic_function(a | b))
            if b_bits == 0:
                break
            b_bits = (b_bits - 1) & complement_bits


def test_overlap_split_identity_exhaustive_m6():
    # chi(A or B) = chi(A minus B) + chi(B minus A) + chi(A and B)
    space = HistorySpace.of_size(6)
    for a in space.all_subsets():
        for b in space.all_subsets():
            lhs = characteristic_function(a | b)
            rhs = (characteristic_function(a - b)
                   + characteristic_function(b - a)
                   + characteristic_function(a & b))
            assert lhs == rhs


def test_subset_boolean_laws_exhaustive_m4():
    space = HistorySpace.of_size(4)
    subsets = list(space.all_subsets())
    for a in subsets:
        for b in subsets:
            assert a | b == b | a
            assert a & b == b & a
            assert a ^ b == (a - b) | (b - a)
            assert a - b == a & b.complement()
            assert (a | b).complement() == a.complement() & b.complement()
            assert a | (a & b) == a
            assert a & (a | b) == a


@given(st.integers(min_value=0, max_value=4095),
       st.integers(min_value=0, max_value=4095),
       st.integers(min_value=0, max_value=4095))
@settings(max_examples=60)
def test_subset_boolean_laws_sampled_m12(abits, bbits, cbits):
    space = HistorySpace.of_size(12)
    a = space.subset_from_bits(abits)
    b = space.subset_from_bits(bbits)
    c = space.subset_from_bits(cbits)
    assert (a | b) | c == a | (b | c)
    assert (a & b) & c == a & (b & c)
    assert a & (b | c) == (a & b) | (a & c)
    assert a ^ b == (a | b) - (a & b)


@given(elements, elements, elements)
@settings(max_examples=60)
def test_group_axioms_exact(g, h, l):
    assert (g + h) + l == g + (h + l)
    assert g + h == h + g
    assert g + SPACE.zero() == g
    assert g + (-g) == SPACE.zero()
    assert g - h == g + (-h)


@given(elements)
def test_scalar_action(g):
    assert 2 * g == g + g
    assert Fraction(1, 2) * (g + g) == g
    assert 0 * g == SPACE.zero()


def test_pointwise_product_is_the_algebra_product():
    g = SPACE.element((1, 2, 3))
    h = SPACE.element((2, 0, Fraction(1, 3)))
    assert g.pointwise_mul(h).coeffs == (2, 0, 1)
    assert g.pointwise_mul(ones(SPACE)) == g


def test_space_mismatch_is_an_error():
    other = HistorySpace.of_size(2)
    with pytest.raises(SpaceMismatchError):
        SPACE.zero() + other.zero()
    with pytest.raises(SpaceMismatchError):
        SPACE.subset([0]) | other.subset([0])
    with pytest.raises(SpaceMismatchError):
        SPACE.element((1, 2))
    with pytest.raises(TypeError):
        SPACE.zero() * SPACE.zero()


def test_immutability():
    g = SPACE.element((1, 2, 3))
    with pytest.raises(AttributeError):
        g.coeffs = (0, 0, 0)
