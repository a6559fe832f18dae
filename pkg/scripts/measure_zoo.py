#!/usr/bin/env python3
"""Classify a zoo of measures by order probing and primitivity.

Builds additive, quadratic, cubic, squared-amplitude, and black-box
measures over a three-history space and prints, for each, the probed order
and the primitivity classification.  Exact variants get exact verdicts;
black boxes get sample-consistent ones.

Usage:
    python scripts/measure_zoo.py [--seed 7]
"""

import argparse
from fractions import Fraction

from sumrules.histories import HistorySpace
from sumrules.hopf import classify_primitivity
from sumrules.interference import probe_order
from sumrules.measures import (ClosureMeasure, PolynomialMeasure,
                               QuantumMeasure)
from sumrules.sampling import sample_family


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    space = HistorySpace.of_size(3)
    lam = PolynomialMeasure.linear(space, (1, 2, 3))
    zoo = [
        ("additive", lam),
        ("quadratic (squared additive)", lam * lam),
        ("cubic", lam ** 3),
        ("mixed degree 1 + 2", lam + lam * lam),
        ("exact amplitudes", QuantumMeasure(
            space, (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)))),
        ("black-box quadratic", ClosureMeasure(space, lam * lam)),
    ]
    samples = sample_family(space, args.seed, count=48)

    print(f"{'measure':<30} {'order':>6} {'exact':>6}   primitivity")
    for name, mu in zoo:
        order = probe_order(mu, n_max=5, samples=samples)
        prim = classify_primitivity(mu, k_max=5, seed=args.seed)
        print(f"{name:<30} {str(order.order):>6} {str(order.exact):>6}   "
              f"{prim.message}")


if __name__ == "__main__":
    main()
