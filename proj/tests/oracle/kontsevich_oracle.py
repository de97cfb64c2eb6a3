#!/usr/bin/env python3
"""Independent re-evaluation of the tropical Kontsevich recursion.

Prints "d N_d" rows for d = 1..dmax using Python integers. Used to freeze
expected values and to cross-check the `kontsevich` subcommand.
"""
import sys
from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def rational_curves(d):
    if d == 1:
        return 1
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        weight = d1 * d1 * d2 * d2 * comb(3 * d - 4, 3 * d1 - 2) \
            - d1 ** 3 * d2 * comb(3 * d - 4, 3 * d1 - 1)
        total += weight * rational_curves(d1) * rational_curves(d2)
    return total


def main():
    dmax = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    for d in range(1, dmax + 1):
        print(d, rational_curves(d))


if __name__ == "__main__":
    main()
