#!/usr/bin/env python3
"""Run the theorem battery over a grid of (n, d) cells and print a table.

Usage: python scripts/run_grid.py [--cells 4,2 5,3 ...]
Exits nonzero if any theorem check fails anywhere (it never should).
"""

import argparse
import sys
import time

from matroidal import enumerate_matroidal, theorem_battery
from matroidal.enumeration import THEOREMS

DEFAULT_CELLS = ["2,1", "3,2", "4,2", "5,2", "6,2", "4,3", "5,3", "6,3"]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cells", nargs="*", default=DEFAULT_CELLS,
                        help="grid cells as n,d pairs")
    args = parser.parse_args()
    cells = [tuple(int(x) for x in cell.split(",")) for cell in args.cells]

    header = f"{'cell':>7} {'ideals':>7} {'CM':>4} {'unmixed':>8} {'exact ara':>10} {'time':>7}  fails"
    print(header)
    print("-" * len(header))
    any_fail = False
    for n, d in cells:
        start = time.perf_counter()
        total = cm = unmixed = exact = 0
        fails: dict[str, int] = {}
        for mi in enumerate_matroidal(n, d):
            total += 1
            result = theorem_battery(mi)
            cm += result.cohen_macaulay
            unmixed += result.unmixed
            exact += bool(result.ara_exact)
            for name in THEOREMS:
                if result.verdicts[name] == "fail":
                    fails[name] = fails.get(name, 0) + 1
        elapsed = time.perf_counter() - start
        any_fail |= bool(fails)
        print(
            f"({n},{d})".rjust(7)
            + f" {total:>7} {cm:>4} {unmixed:>8} {exact:>10} {elapsed:>6.1f}s  "
            + (", ".join(f"{k}={v}" for k, v in fails.items()) or "-")
        )
    return 1 if any_fail else 0


if __name__ == "__main__":
    sys.exit(main())
