#!/usr/bin/env python3
"""Run the oracle sweep and report timing and any mismatches.

Recomputes every local invariant from the intersection matrix (exact linear
solve plus quadratic form) and compares against the closed forms.

Example:
    python3 scripts/oracle_sweep.py --r-max 10 --d-max 60
"""

import argparse
import time

from linesurf import sweep_verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--r-max", type=int, default=10)
    parser.add_argument("--d-max", type=int, default=60)
    args = parser.parse_args()

    start = time.perf_counter()
    reports = sweep_verify(args.r_max, args.d_max)
    elapsed = time.perf_counter() - start
    bad = [rep for rep in reports if not rep.ok]
    print(f"{len(reports)} pairs checked in {elapsed:.2f} s, {len(bad)} mismatches")
    for rep in bad:
        print(f"  r={rep.r} d={rep.d} coeffs={rep.coefficients_match} "
              f"dci={rep.dci_match} dcii={rep.dcii_match}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
