#!/usr/bin/env python3
"""Compare untangling plans across policies for all small tangle numbers.

A rotation permutes all four strand ends while a twist permutes only two, so
among plans of equal length the one with fewer rotations disturbs the tangle
less.  This sweep measures how often the least-absolute-remainders policy
strictly beats the regular one on rotations, at identical totals.
"""

import argparse
from math import gcd

from tanglegcd import Variant, normalize, plan_metrics, plan_untangle


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=120,
                        help="largest numerator/denominator to sweep")
    args = parser.parse_args()

    fractions = [
        normalize(p, q)
        for p in range(1, args.max + 1)
        for q in range(1, args.max + 1)
        if gcd(p, q) == 1
    ]

    strict_wins = 0
    ties = 0
    saved_rotations = 0
    total_mismatches = 0
    best = (0, None)
    for f in fractions:
        regular = plan_metrics(plan_untangle(f, Variant.REGULAR))
        lar = plan_metrics(plan_untangle(f, Variant.LEAST_ABSOLUTE))
        if regular.total != lar.total:
            total_mismatches += 1
        saving = regular.rotations - lar.rotations
        saved_rotations += saving
        if saving > 0:
            strict_wins += 1
        else:
            ties += 1
        if saving > best[0]:
            best = (saving, f)

    n = len(fractions)
    print(f"tangle numbers swept: {n} (coprime p/q, 1 <= p, q <= {args.max})")
    print(f"plan-total mismatches between the two policies: {total_mismatches}")
    print(f"LAR strictly fewer rotations: {strict_wins} ({strict_wins / n:.2%})")
    print(f"rotation ties: {ties}")
    print(f"mean rotations saved: {saved_rotations / n:.3f}")
    saving, f = best
    if f is not None:
        print()
        print(f"largest saving: {saving} rotations on the {f} tangle")
        for policy in (Variant.REGULAR, Variant.LEAST_ABSOLUTE, Variant.NEGATIVE):
            m = plan_metrics(plan_untangle(f, policy))
            print(f"  {policy.value:<13} twists {m.twists:3d}  rotations {m.rotations:3d}  "
                  f"total {m.total:3d}")


if __name__ == "__main__":
    main()
