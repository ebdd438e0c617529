#!/usr/bin/env python3
"""Run every formula-vs-oracle verification family at desk scale and print
the combined PASS/FAIL report.  Exits nonzero if anything disagrees.

This is the same sweep the CLI exposes piecemeal via `luckypark verify`;
tweak the argument lists below to push the grids further (mind the cap).
"""

import sys

from luckypark.cli import main

SWEEPS = [
    ["verify", "outcomes-fixed-I", "--n-max", "6"],
    ["verify", "outcomes-mn-fixed-I", "--m-max", "4", "--n-max", "6"],
    ["verify", "outcomes-mn-k", "--m-max", "4", "--n-max", "6"],
    ["verify", "outcomes-completion-k", "--n", "4", "--s", "2,5"],
    ["verify", "outcomes-completion-k", "--n", "3", "--s", "1,3,5"],
    ["verify", "c1", "--n-max", "5"],
    ["verify", "c2", "--n-max", "5"],
    ["verify", "c3", "--n-max", "5"],
    ["verify", "outcomes-lucky-spots", "--u", "1,1,2,4,4"],
    ["verify", "outcomes-lucky-spots", "--u", "2,2,3,5"],
    ["verify", "upf-fixed-I", "--u", "1,1,3,3,3"],
    ["verify", "upf-k", "--u", "1,1,3"],
    ["verify", "upf-k", "--u", "2,3,3,5"],
    ["verify", "upf-const-jump", "--i", "2", "--j", "4", "--n-max", "5"],
]


def run() -> int:
    worst = 0
    for argv in SWEEPS:
        print(f"$ luckypark {' '.join(argv)}")
        worst = max(worst, main(argv))
        print()
    print("all sweeps clean" if worst == 0 else "some sweeps FAILED")
    return worst


if __name__ == "__main__":
    sys.exit(run())
