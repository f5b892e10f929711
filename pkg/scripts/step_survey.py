#!/usr/bin/env python3
"""Sweep every pair up to a limit and survey the variant step accounting.

Checks two identities across the whole range and reports how much the
least-absolute-remainders variant shortens traces in practice:

* regular and LAR runs always cost the same subtraction+swap total;
* the division savings of LAR equal its count of negative remainders.
"""

import argparse
from collections import Counter

from tanglegcd import (
    division_count,
    goodman_zaring_defect,
    run_lar,
    run_regular,
    step_count,
)


def survey(limit):
    total_mismatches = []
    defect_mismatches = []
    defects = Counter()
    deepest = (0, (0, 0))
    for x0 in range(1, limit + 1):
        for x1 in range(1, x0 + 1):
            regular = run_regular(x0, x1)
            lar = run_lar(x0, x1)
            if step_count(regular).total != step_count(lar).total:
                total_mismatches.append((x0, x1))
            defect = goodman_zaring_defect(lar)
            if division_count(regular) - division_count(lar) != defect:
                defect_mismatches.append((x0, x1))
            defects[defect] += 1
            if defect > deepest[0]:
                deepest = (defect, (x0, x1))
    return total_mismatches, defect_mismatches, defects, deepest


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=300, help="largest x0 to sweep")
    args = parser.parse_args()

    total_mismatches, defect_mismatches, defects, deepest = survey(args.max)
    pairs = sum(defects.values())

    print(f"pairs swept: {pairs} (1 <= x1 <= x0 <= {args.max})")
    print(f"step-total mismatches between regular and LAR: {len(total_mismatches)}")
    print(f"division-savings mismatches against the defect: {len(defect_mismatches)}")
    print()
    print("divisions saved by LAR (defect) distribution:")
    for defect in sorted(defects):
        share = defects[defect] / pairs
        print(f"  {defect:2d}: {defects[defect]:7d}  ({share:6.2%})")
    defect, pair = deepest
    print()
    print(f"largest saving: {defect} divisions on pair {pair}")
    print(f"  regular: {division_count(run_regular(*pair))} divisions, "
          f"total {step_count(run_regular(*pair)).total}")
    print(f"  lar:     {division_count(run_lar(*pair))} divisions, "
          f"total {step_count(run_lar(*pair)).total}")


if __name__ == "__main__":
    main()
