"""Group-dual operations: coproduct, counit, antipode, coderivatives."""

import random
from fractions import Fraction

import pytest

from sumrules.histories import HistorySpace
from sumrules.hopf import (antipode, classify_primitivity, coderivative,
                           coderivative_at_identity, coproduct, counit,
                           iterated_coproduct)
from sumrules.interference import interference_value
from sumrules.measures import (ClosureMeasure, PolynomialMeasure,
                               QuantumMeasure, TableMeasure)
from sumrules.polarization import decompose
from sumrules.sampling import (random_element, random_polynomial,
                               random_tuple, sample_family)
from sumrules.scalars import GaussianRational

SPACE = HistorySpace.of_size(3)

LAM = PolynomialMeasure.linear(SPACE, (1, 2, 0))


def test_coproduct_of_additive_function_splits():
    rng = random.Random(0)
    g, h = random_element(SPACE, rng), random_element(SPACE, rng)
    assert coproduct(LAM, g, h) == LAM(g) + LAM(h)


def test_coproduct_with_identity_slot_is_counit_law():
    rng = random.Random(1)
    mu = LAM ** 2
    for _ in range(10):
        g = random_element(SPACE, rng)
        assert coproduct(mu, g, SPACE.zero()) == mu(g)
        assert coproduct(mu, SPACE.zero(), g) == mu(g)


def test_coproduct_square_frozen_example():
    # values 1 and 2 for the additive part: (1 + 2)^2 = 9
    mu = LAM * LAM
    g = SPACE.basis_element(0)
    h = SPACE.basis_element(1)
    assert LAM(g) == 1 and LAM(h) == 2
    assert coproduct(mu, g, h) == 9


def test_cocommutativity():
    rng = random.Random(2)
    mu = random_polynomial(SPACE, rng, 3)
    for _ in range(20):
        g, h = random_element(SPACE, rng), random_element(SPACE, rng)
        assert coproduct(mu, g, h) == coproduct(mu, h, g)


def test_coassociativity_groupings_agree():
    rng = random.Random(3)
    mu = random_polynomial(SPACE, rng, 3)
    for _ in range(20):
        g, h, l = (random_element(SPACE, rng) for _ in range(3))
        via_left = coproduct(mu, g + h, l)
        via_right = coproduct(mu, g, h + l)
        assert via_left == via_right == iterated_coproduct(mu, [g, h, l])


def test_counit_examples():
    assert counit(LAM ** 2) == 0
    one = ClosureMeasure(SPACE, lambda g: 1)
    assert counit(one) == 1
    shifted = PolynomialMeasure(SPACE, {(0, 0, 0): 5, (2, 0, 0): 1})
    assert counit(shifted) == 5
    assert counit(lambda g: 7, space=SPACE) == 7
    with pytest.raises(ValueError):
        counit(lambda g: 7)


def test_antipode_examples():
    rng = random.Random(4)
    g = random_element(SPACE, rng)
    even = LAM * LAM
    assert antipode(even, g) == even(g)
    assert antipode(LAM, g) == -LAM(g)
    flipped_twice = antipode(ClosureMeasure(SPACE, lambda x: LAM(-x)), g)
    assert flipped_twice == LAM(g)


def test_coderivative_of_additive_function_vanishes_at_order_two():
    rng = random.Random(5)
    for _ in range(20):
        args = random_tuple(SPACE, 2, rng)
        assert coderivative_at_identity(LAM, 2, args) == 0


def test_coderivative_of_constant_vanishes():
    one = ClosureMeasure(SPACE, lambda g: 1)
    rng = random.Random(6)
    for k in (1, 2, 3):
        args = random_tuple(SPACE, k, rng)
        assert coderivative_at_identity(one, k, args) == 0


def test_first_coderivative_subtracts_value_at_identity():
    shifted = PolynomialMeasure(SPACE, {(0, 0, 0): 5, (1, 0, 0): 1})
    g = SPACE.element((3, 0, 0))
    assert coderivative_at_identity(shifted, 1, [g]) == shifted(g) - 5


def test_coderivative_away_from_identity_is_nested_difference():
    mu = LAM ** 2
    rng = random.Random(7)
    base, g, h = (random_element(SPACE, rng) for _ in range(3))
    expected = mu(base + g + h) - mu(base + g) - mu(base + h) + mu(base)
    assert coderivative(mu, 2, base, [g, h]) == expected


def test_coderivative_bridge_to_interference():
    rng = random.Random(8)
    for k in range(1, 6):
        mu = random_polynomial(SPACE, rng, 3)
        args = random_tuple(SPACE, k, rng)
        assert coderivative_at_identity(mu, k, args) == \
            interference_value(mu, args)


def test_bridge_offset_is_exactly_the_identity_value():
    # with f(0) != 0 the two sides differ by (-1)^k f(0)
    shifted = PolynomialMeasure(SPACE, {(0, 0, 0): 5, (2, 0, 0): 1})
    rng = random.Random(9)
    for k in (1, 2, 3):
        args = random_tuple(SPACE, k, rng)
        assert coderivative_at_identity(shifted, k, args) == \
            interference_value(shifted, args) + (-1) ** k * 5


def test_classify_additive_is_one_primitive():
    report = classify_primitivity(LAM, 4)
    assert report.exact and report.order == 1
    assert report.vanished_orders == (2, 3, 4)


def test_classify_cubic_with_witness():
    lam = PolynomialMeasure.linear(SPACE, (1, 1, 2))
    report = classify_primitivity(lam ** 3, 5)
    assert report.exact and report.order == 3
    args, value = report.witnesses[0]
    assert value != 0
    assert coderivative_at_identity(lam ** 3, 3, args) == value


def test_classify_exact_quantum_as_two_primitive():
    mu = QuantumMeasure(SPACE, (Fraction(1, 2), Fraction(1, 3), Fraction(1)))
    report = classify_primitivity(mu, 4, seed=5)
    assert report.order == 2
    assert not report.exact
    assert report.vanished_orders == (3, 4)


def test_classify_gaussian_rational_quantum():
    mu = QuantumMeasure(SPACE, (GaussianRational(1, 1),
                                GaussianRational(0, Fraction(1, 2)),
                                Fraction(1, 3)))
    report = classify_primitivity(mu, 4, seed=6)
    assert report.order == 2


def test_classify_constant_reports_no_order():
    constant = PolynomialMeasure(SPACE, {(0, 0, 0): 3})
    report = classify_primitivity(constant, 4)
    assert report.order is None and report.exact
    table = TableMeasure(SPACE, {SPACE.zero().coeffs: Fraction(0)})
    zeroish = ClosureMeasure(SPACE, lambda g: 0)
    report = classify_primitivity(zeroish, 3, seed=1)
    assert report.order is None
    assert "vanishing on samples" in report.message
    assert table(SPACE.zero()) == 0


def test_primitive_degree_roundtrip_through_decomposition():
    # a degree-k polynomial classifies at k, and its decomposition rebuilds
    # it as a polynomial in the additive coordinate functionals
    rng = random.Random(10)
    for k in (2, 3):
        mu = random_polynomial(SPACE, rng, k, ensure_top=True)
        report = classify_primitivity(mu, 5)
        assert report.exact and report.order == k
        rebuilt = decompose(mu, k).as_polynomial()
        assert rebuilt.terms == mu.terms
        assert classify_primitivity(rebuilt, 5).order == k


def test_black_box_classification_is_sample_consistent():
    lam = PolynomialMeasure.linear(SPACE, (1, -1, 2))
    opaque = ClosureMeasure(SPACE, lam * lam)
    report = classify_primitivity(opaque, 4,
                                  samples=sample_family(SPACE, 11, 24))
    assert report.order == 2
    assert not report.exact
    assert "sample-consistent" in report.message


def test_coderivative_argument_validation():
    with pytest.raises(ValueError):
        coderivative_at_identity(LAM, 0, [])
    with pytest.raises(ValueError):
        coderivative_at_identity(LAM, 2, [SPACE.zero()])
