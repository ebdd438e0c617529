#!/usr/bin/env python3
"""Oracle scan of single-blocked-spot streets beyond the known recursions.

Closed or recursive outcome counts exist when the blocked spot is 1, 2, or
3; for a general blocked spot s only the brute-force census is available.
This emits CSV rows (s, n, lucky set, distinct outcomes) so candidate
recursions in s can be checked against exact data.

Usage: blocked_spot_scan.py [max_spot] [max_n]   (defaults 5 and 5)
"""

import csv
import itertools
import sys

from luckypark import census_vector


def scan(max_spot: int, max_n: int) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["blocked_spot", "n", "I", "outcomes"])
    for spot in range(1, max_spot + 1):
        for n in range(max(1, spot - 1), max_n + 1):
            u = tuple(x for x in range(1, n + 2) if x != spot)
            if len(u) != n:
                continue
            census = census_vector(u)
            for size in range(n + 1):
                for lucky in itertools.combinations(range(1, n + 1), size):
                    count = len(census.outcomes_for(frozenset(lucky)))
                    if count:
                        writer.writerow(
                            [spot, n, ",".join(map(str, lucky)), count]
                        )


if __name__ == "__main__":
    max_spot = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    max_n = int(sys.argv[2]) if len(sys.argv) > 2 else 5
    scan(max_spot, max_n)
