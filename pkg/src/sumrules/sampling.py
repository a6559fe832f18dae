"""Seed-deterministic random rationals, group elements and argument tuples.

Everything randomized in this package flows through these helpers so a seed
fully determines all sampling.  Coefficients are small integers or exact
rationals, which keeps sampled tuples valid for both scalar backends.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .histories import GroupElement, HistorySpace
from .measures import PolynomialMeasure


def random_rational(rng: random.Random, max_numerator: int = 4,
                    max_denominator: int = 3) -> Fraction:
    num = rng.randint(-max_numerator, max_numerator)
    den = rng.randint(1, max_denominator)
    return Fraction(num, den)


def random_element(space: HistorySpace, rng: random.Random,
                   integers_only: bool = False) -> GroupElement:
    if integers_only:
        coeffs = [rng.randint(-3, 3) for _ in range(space.size)]
    else:
        coeffs = [random_rational(rng) for _ in range(space.size)]
    return space.element(coeffs)


def random_tuple(space: HistorySpace, k: int, rng: random.Random,
                 integers_only: bool = False) -> tuple[GroupElement, ...]:
    return tuple(random_element(space, rng, integers_only) for _ in range(k))


def sample_family(space: HistorySpace, seed: int, count: int,
                  integers_only: bool = False
                  ) -> Callable[[int], Sequence[tuple[GroupElement, ...]]]:
    """Callable mapping an arity k to a deterministic list of k-tuples."""

    def family(k: int) -> list[tuple[GroupElement, ...]]:
        rng = random.Random(seed * 7_654_321 + k)
        return [random_tuple(space, k, rng, integers_only)
                for _ in range(count)]

    return family


def random_polynomial(space: HistorySpace, rng: random.Random,
                      max_degree: int, ensure_top: bool = False,
                      density: float = 0.5,
                      integer_coeffs: bool = False) -> PolynomialMeasure:
    """Random polynomial in the additive coordinates with zero constant term.

    ``ensure_top`` forces at least one non-zero term of total degree exactly
    ``max_degree``.  Integer coefficients keep heavy exact test loops fast.
    """

    def coeff() -> Fraction | int:
        if integer_coeffs:
            c = rng.randint(-3, 3)
            return c if c != 0 else 1
        c = random_rational(rng)
        return c if c != 0 else Fraction(1)

    terms: dict[tuple[int, ...], Fraction | int] = {}
    exponent_tuples = [
        exps for exps in product(range(max_degree + 1), repeat=space.size)
        if 1 <= sum(exps) <= max_degree
    ]
    for exps in exponent_tuples:
        if rng.random() < density:
            terms[exps] = coeff()
    if ensure_top and not any(sum(e) == max_degree for e in terms):
        top = [e for e in exponent_tuples if sum(e) == max_degree]
        terms[rng.choice(top)] = coeff()
    return PolynomialMeasure(space, terms)
