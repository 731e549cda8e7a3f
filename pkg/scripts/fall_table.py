#!/usr/bin/env python3
"""Print the exact fall distributions at one cabled crossing of width K,
optionally evaluated at a rational q.

Usage: python scripts/fall_table.py --cable 3 [--eval-q 1/2]
"""

import argparse
import sys
from fractions import Fraction

from braidbowl.cabled import fall_distribution


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--cable", type=int, default=2)
    parser.add_argument("--eval-q", type=Fraction, default=None)
    args = parser.parse_args()
    K = args.cable

    for a in range(K + 1):
        for b in range(K + 1):
            dist = fall_distribution(K, a, b)
            print(f"K={K} a={a} b={b}")
            for c, p in dist.items():
                shown = p if args.eval_q is None else p.eval_at(args.eval_q)
                print(f"  c={c}: {shown}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
