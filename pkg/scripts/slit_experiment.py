#!/usr/bin/env python3
"""Sweep random slit geometries and tabulate the interference sum rules.

For each slit count the script prints the worst-case order-2/3/4
interference magnitudes over a batch of seeded random geometries.  The
pattern to look for: order-2 terms are macroscopic (interference fringes are
real), while the order-3 and order-4 terms sit at the floating-point floor
for a squared-amplitude measure.

Usage:
    python scripts/slit_experiment.py [--runs 200] [--seed 42]
"""

import argparse
import random

from sumrules.slits import random_scenario, run_sum_rules


def sweep(slit_count: int, runs: int, seed: int) -> dict:
    rng = random.Random(seed)
    worst = {"pairs": 0.0, "triples": 0.0, "quadruples": 0.0}
    interfering = 0
    for _ in range(runs):
        report = run_sum_rules(random_scenario(rng, slit_count), tol=1e-9)
        worst["pairs"] = max(worst["pairs"], report.max_abs_pairwise)
        worst["triples"] = max(worst["triples"], report.max_abs_triples)
        worst["quadruples"] = max(worst["quadruples"],
                                  report.max_abs_quadruples)
        if report.max_abs_pairwise > 1e-6:
            interfering += 1
    worst["interfering"] = interfering
    return worst


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--runs", type=int, default=200)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    print(f"{args.runs} random geometries per slit count, seed {args.seed}")
    print(f"{'slits':>5}  {'max |I2|':>12}  {'max |I3|':>12}  "
          f"{'max |I4|':>12}  {'with |I2|>1e-6':>15}")
    for slit_count in (2, 3, 4):
        worst = sweep(slit_count, args.runs, args.seed)
        print(f"{slit_count:>5}  {worst['pairs']:>12.3e}  "
              f"{worst['triples']:>12.3e}  {worst['quadruples']:>12.3e}  "
              f"{worst['interfering']:>11}/{args.runs}")
    print("\norder-2 interference is physical; orders 3 and 4 vanish to")
    print("numerical precision for any squared-amplitude measure.")


if __name__ == "__main__":
    main()
