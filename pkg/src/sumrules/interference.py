"""Interference functionals of arbitrary order and order probing.

The order-k interference functional of a measure is the signed
inclusion-exclusion sum

    I_k(a_1, ..., a_k) = sum over non-empty S of (-1)^(k-|S|) mu(sum_{i in S} a_i).

I_2 is the familiar two-alternative interference term; I_{k+1} vanishing
identically characterizes measures of order k.  The functional is symmetric
in its arguments and satisfies, for completely arbitrary evaluators,

    I_{k+1}(b, c, rest...) = I_k(b+c, rest...) - I_k(b, rest...) - I_k(c, rest...).

We extend the definition down to k = 1 by I_1(a) = mu(a), which is the
inclusion-exclusion formula at k = 1 and lets the recursion bottom out.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, Sequence

from .errors import CapExceededError
from .histories import GroupElement, SubsetMask, characteristic_function
from .measures import Measure, PolynomialMeasure
from .scalars import Scalar, close, is_exact, is_zero, stable_sum

# 2^k evaluation terms; beyond this the enumeration is no longer desk-scale.
MAX_SUBSET_ORDER = 16


@dataclass(frozen=True)
class SubsetTerm:
    indices: tuple[int, ...]
    sign: int
    value: Scalar


@dataclass(frozen=True)
class InterferenceResult:
    k: int
    value: Scalar
    terms: tuple[SubsetTerm, ...] | None = None


def interference(mu: Measure, args: Sequence[GroupElement],
                 breakdown: bool = False) -> InterferenceResult:
    """Evaluate the order-k interference functional, k = len(args)."""
    k = len(args)
    if k < 1:
        raise ValueError("interference needs at least one argument")
    if k > MAX_SUBSET_ORDER:
        raise CapExceededError(
            f"interference order capped at {MAX_SUBSET_ORDER} "
            f"(2^{k} subset terms requested)")
    terms: list[SubsetTerm] = []
    parts: list[Scalar] = []
    for bits in range(1, 1 << k):
        size = bin(bits).count("1")
        point = mu.space.zero()
        indices = []
        for i in range(k):
            if bits >> i & 1:
                point = point + args[i]
                indices.append(i)
        sign = 1 if (k - size) % 2 == 0 else -1
        value = mu(point)
        parts.append(sign * value)
        if breakdown:
            terms.append(SubsetTerm(tuple(indices), sign, value))
    return InterferenceResult(
        k=k, value=stable_sum(parts),
        terms=tuple(terms) if breakdown else None)


def interference_value(mu: Measure,
                       args: Sequence[GroupElement]) -> Scalar:
    return interference(mu, args).value


def recursion_holds(mu: Measure, b: GroupElement, c: GroupElement,
                    rest: Sequence[GroupElement] = (),
                    tol: float | None = None) -> bool:
    """Check the one-step recursion splitting the first argument.

    Holds for completely arbitrary measures, with no order assumption.
    """
    lhs = interference_value(mu, [b, c, *rest])
    rhs = stable_sum([
        interference_value(mu, [b + c, *rest]),
        -interference_value(mu, [b, *rest]),
        -interference_value(mu, [c, *rest]),
    ])
    return close(lhs, rhs, tol)


def overlapping_pair_forms(mu: Measure, a: SubsetMask,
                           b: SubsetMask) -> tuple[Scalar, Scalar, Scalar]:
    """Three expressions for pairwise interference of possibly overlapping sets.

    Returns (set form, symmetric-difference form, indicator-sum form).  On
    disjoint sets all three reduce to the pairwise interference of the two
    indicator vectors.  For negation-even quadratic measures (the
    squared-amplitude case the forms were derived for) the three agree on
    every pair; a quadratic measure with an odd (additive) component shifts
    the two set forms by twice its value on the overlap indicator.
    """
    chi = characteristic_function
    form1 = stable_sum([
        mu(chi(a | b)), mu(chi(a & b)), -mu(chi(a - b)), -mu(chi(b - a))])
    form2 = stable_sum([
        mu(chi(a ^ b)), mu(chi(a)), mu(chi(b)),
        -2 * mu(chi(a - b)), -2 * mu(chi(b - a))])
    form_g = stable_sum([
        mu(chi(a) + chi(b)), -mu(chi(a)), -mu(chi(b))])
    return form1, form2, form_g


@dataclass(frozen=True)
class OrderReport:
    """Outcome of probing the order of a measure.

    ``exact`` is True only for polynomial measures, where the order is the
    total degree.  For black boxes the verdict is sample-based and the
    message never claims more than consistency on the sample set.
    """
    order: int | None
    exact: bool
    n_max: int
    message: str
    witness_args: tuple[GroupElement, ...] | None = None
    witness_value: Scalar | None = None


SampleFamily = Callable[[int], Sequence[tuple[GroupElement, ...]]]


def probe_order(mu: Measure, n_max: int,
                samples: SampleFamily | None = None,
                tol: float | None = None) -> OrderReport:
    """Find the smallest n with vanishing order-(n+1) interference.

    Polynomial measures are answered exactly by total degree (they must have
    zero constant term to be measures at all).  Other variants are probed on
    the supplied sample family, a callable mapping k to a list of k-tuples.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if isinstance(mu, PolynomialMeasure):
        return _probe_polynomial(mu, n_max)
    if samples is None:
        raise ValueError("non-polynomial measures need a sample family")
    witness: tuple[tuple[GroupElement, ...], Scalar] | None = None
    for n in range(0, n_max + 1):
        values = [(tup, interference_value(mu, tup)) for tup in samples(n + 1)]
        if all(is_zero(v, tol) for _, v in values):
            return OrderReport(
                order=n, exact=False, n_max=n_max,
                message=f"consistent with order <= {n} on sample set",
                witness_args=witness[0] if witness else None,
                witness_value=witness[1] if witness else None)
        for tup, v in values:
            if not is_zero(v, tol):
                witness = (tup, v)
                break
    return OrderReport(order=None, exact=False, n_max=n_max,
                       message=f"order > {n_max} on samples")


def _strict_zero(v: Scalar) -> bool:
    return is_zero(v, None if is_exact(v) else 0.0)


def _probe_polynomial(mu: PolynomialMeasure, n_max: int) -> OrderReport:
    if not _strict_zero(mu.constant_term):
        raise ValueError("polynomial measures must have zero constant term")
    if not mu.terms:
        return OrderReport(order=0, exact=True, n_max=n_max,
                           message="zero measure (order 0)")
    d = mu.degree
    if d > n_max:
        return OrderReport(order=None, exact=True, n_max=n_max,
                           message=f"order {d} exceeds n_max = {n_max}")
    witness = _polynomial_witness(mu, d)
    return OrderReport(
        order=d, exact=True, n_max=n_max,
        message=f"total degree {d} (exact)",
        witness_args=witness[0] if witness else None,
        witness_value=witness[1] if witness else None)


def _polynomial_witness(mu: PolynomialMeasure, k: int):
    """A basis k-tuple with non-vanishing order-k interference.

    One always exists for a polynomial of exact degree k: the top-degree
    homogeneous form is non-zero on some basis tuple.
    """
    for idx in combinations_with_replacement(range(mu.space.size), k):
        args = tuple(mu.space.basis_element(i) for i in idx)
        v = interference_value(mu, args)
        if not _strict_zero(v):
            return args, v
    return None
