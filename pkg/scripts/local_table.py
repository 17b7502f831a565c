#!/usr/bin/env python3
"""Print the local invariant table (DCI, DCII, DMY, E) over a (r, d) grid.

Example:
    python3 scripts/local_table.py --r-max 6 --d-max 20
    python3 scripts/local_table.py --r-max 6 --d-max 20 --residue 1
"""

import argparse

from linesurf import local_invariants


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--r-max", type=int, default=6)
    parser.add_argument("--d-max", type=int, default=20)
    parser.add_argument("--residue", type=int, default=None,
                        help="restrict to d with d mod r equal to this value")
    args = parser.parse_args()

    print(f"{'r':>3} {'d':>4} {'DCI':>8} {'DCII':>8} {'DMY':>8} {'E':>8}")
    for r in range(2, args.r_max + 1):
        for d in range(r, args.d_max + 1):
            if args.residue is not None and d % r != args.residue % r:
                continue
            inv = local_invariants(r, d)
            print(f"{r:>3} {d:>4} {inv.dci:>8} {inv.dcii:>8} {inv.dmy:>8} {inv.e:>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
