"""Measure variants, the defining order identity, parity, and the action."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sumrules.errors import SpaceMismatchError, UnsampledPointError
from sumrules.histories import HistorySpace, characteristic_function, ones
from sumrules.measures import (ClosureMeasure, PolynomialMeasure,
                               QuantumMeasure, TableMeasure,
                               bimodule_action, check_order_identity,
                               parity_split, quadratic_even_form,
                               quantum_measure_from_amplitudes)
from sumrules.sampling import random_element

SPACE = HistorySpace.of_size(3)

coeff = st.fractions(min_value=-3, max_value=3, max_denominator=4)
elements = st.lists(coeff, min_size=3, max_size=3).map(SPACE.element)


def lam(weights=(1, 1, 2)):
    return PolynomialMeasure.linear(SPACE, weights)


def test_quantum_equal_amplitudes_doubles_then_squares():
    z = 1 / math.sqrt(2)
    mu = quantum_measure_from_amplitudes([z, z])
    space = mu.space
    a = characteristic_function(space.subset([0]))
    b = characteristic_function(space.subset([1]))
    assert mu(a) == pytest.approx(0.5, abs=1e-12)
    assert mu(a + b) == pytest.approx(2.0, abs=1e-12)


def test_polynomial_square_at_three():
    space = HistorySpace.of_size(1)
    mu = PolynomialMeasure.coordinate(space, 0) ** 2
    assert mu(space.element((3,))) == 9


def test_every_variant_vanishes_at_zero():
    variants = [
        lam() ** 2,
        quantum_measure_from_amplitudes([Fraction(1, 2), Fraction(1, 3)]),
        quantum_measure_from_amplitudes([0.6 + 0.2j, 0.3j]),
        TableMeasure(SPACE, {SPACE.zero().coeffs: 0}),
    ]
    for mu in variants:
        assert mu(mu.space.zero()) == 0


def test_table_measure_misses_raise():
    mu = TableMeasure(SPACE, {(1, 0, 0): Fraction(1, 2)})
    assert mu(SPACE.element((1, 0, 0))) == Fraction(1, 2)
    assert not mu.covers(SPACE.zero())
    with pytest.raises(UnsampledPointError):
        mu(SPACE.zero())


def test_quantum_nonnegative_on_indicator_vectors():
    mu = quantum_measure_from_amplitudes(
        [Fraction(1, 2), Fraction(-1, 3), Fraction(1, 5)], SPACE)
    for mask in SPACE.all_subsets():
        value = mu(characteristic_function(mask))
        assert value >= 0


@given(elements, elements)
@settings(max_examples=40)
def test_additive_measure_passes_order_one_identity(a, b):
    assert check_order_identity(lam(), 1, [a, b])


@given(elements, elements, elements)
@settings(max_examples=40)
def test_additive_also_passes_order_two(a, b, c):
    # order classes are nested: order 1 implies order 2
    assert check_order_identity(lam(), 2, [a, b, c])


@given(elements, elements, elements)
@settings(max_examples=40)
def test_exact_quantum_passes_order_two_identity(a, b, c):
    mu = QuantumMeasure(SPACE, (Fraction(1, 2), Fraction(1, 3), Fraction(1)))
    assert check_order_identity(mu, 2, [a, b, c])


def test_float_quantum_passes_order_two_within_tolerance():
    rng = random.Random(9)
    mu = quantum_measure_from_amplitudes(
        [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)],
        SPACE)
    for _ in range(50):
        args = [random_element(SPACE, rng, integers_only=True)
                for _ in range(3)]
        assert check_order_identity(mu, 2, args, tol=1e-9)


def test_cubic_fails_order_two_identity():
    mu = lam() ** 3
    args = [SPACE.basis_element(0), SPACE.basis_element(1),
            SPACE.basis_element(2)]
    assert not check_order_identity(mu, 2, args)
    assert check_order_identity(mu, 3, args + [SPACE.basis_element(0)])


def test_order_identity_argument_count():
    with pytest.raises(ValueError):
        check_order_identity(lam(), 2, [SPACE.zero()])


def test_parity_of_even_and_odd_measures():
    squared = lam() ** 2
    split = parity_split(squared)
    g = SPACE.element((1, Fraction(1, 2), -2))
    assert split.even(g) == squared(g)
    assert split.odd(g) == 0
    linear = lam()
    split = parity_split(linear)
    assert split.even(g) == 0
    assert split.odd(g) == linear(g)


def test_parity_split_frozen_example():
    # mu = lam + lam^2 evaluated where lam takes the value 2
    space = HistorySpace.of_size(1)
    coord = PolynomialMeasure.coordinate(space, 0)
    mu = coord + coord ** 2
    split = parity_split(mu)
    a = space.element((2,))
    assert split.even(a) == 4
    assert split.odd(a) == 2


@given(elements)
@settings(max_examples=30)
def test_parity_parts_recombine_and_have_parity(g):
    mu = lam() + lam() ** 2
    split = parity_split(mu)
    assert split.even(g) + split.odd(g) == mu(g)
    assert split.even(g) == split.even(-g)
    assert split.odd(g) == -split.odd(-g)


@given(elements, elements)
@settings(max_examples=30)
def test_odd_part_of_quadratic_is_additive(a, b):
    mu = lam() + lam() ** 2
    odd = parity_split(mu).odd
    assert odd(a + b) == odd(a) + odd(b)


@given(elements)
@settings(max_examples=30)
def test_even_part_reconstructs_from_its_form(x):
    mu = lam((1, -2, 3)) ** 2
    even = parity_split(mu).even
    assert quadratic_even_form(even, x, x) == even(x)


def test_bimodule_unit_acts_trivially():
    mu = lam() ** 2
    wrapped = bimodule_action(ones(SPACE), mu, ones(SPACE))
    g = SPACE.element((1, 2, Fraction(1, 3)))
    assert wrapped(g) == mu(g)


def test_bimodule_mask_example():
    # sum-of-coordinates squared, masked to the first two histories
    mu = PolynomialMeasure.linear(SPACE, (1, 1, 1)) ** 2
    masked = bimodule_action(
        characteristic_function(SPACE.subset([0, 1])), mu, ones(SPACE))
    assert masked(SPACE.element((1, 1, 1))) == 4


def test_bimodule_preserves_order_membership():
    rng = random.Random(3)
    mu = lam((1, 2, 3)) ** 2
    x = SPACE.element((2, Fraction(1, 2), 0))
    y = SPACE.element((1, -1, 3))
    acted = bimodule_action(x, mu, y)
    for _ in range(25):
        args = [random_element(SPACE, rng) for _ in range(3)]
        assert check_order_identity(acted, 2, args)


def test_bimodule_space_mismatch():
    other = HistorySpace.of_size(2)
    with pytest.raises(SpaceMismatchError):
        bimodule_action(ones(other), lam(), ones(SPACE))


def test_quantum_interference_examples():
    z = 1 / math.sqrt(2)
    mu = quantum_measure_from_amplitudes([z, z])
    a = characteristic_function(mu.space.subset([0]))
    b = characteristic_function(mu.space.subset([1]))
    i2 = mu(a + b) - mu(a) - mu(b)
    assert i2 == pytest.approx(1.0, abs=1e-12)
    orthogonal = quantum_measure_from_amplitudes([complex(z, 0),
                                                  complex(0, z)])
    i2 = orthogonal(a + b) - orthogonal(a) - orthogonal(b)
    assert i2 == pytest.approx(0.0, abs=1e-12)


def test_closure_measure_wraps_callables():
    mu = ClosureMeasure(SPACE, lambda g: g.coeffs[0] * g.coeffs[0])
    assert mu(SPACE.element((3, 0, 0))) == 9
    with pytest.raises(SpaceMismatchError):
        mu(HistorySpace.of_size(2).zero())
