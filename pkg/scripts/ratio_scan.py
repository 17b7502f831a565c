#!/usr/bin/env python3
"""Scan the Chern ratio c1^2/c2 over nodes-and-triples profiles of degree d.

For fixed d the profiles t_2 = C(d,2) - 3 t_3, t_3 = 0, 1, ... exhaust the
balanced profiles supported on double and triple points; the exact ratio is
printed together with its decomposition numerator and denominator.

Example:
    python3 scripts/ratio_scan.py --d 13
"""

import argparse
from math import comb

from linesurf import chern_ratio_analysis, validate_profile


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--d", type=int, default=13)
    args = parser.parse_args()

    pairs = comb(args.d, 2)
    print(f"{'t_3':>4} {'t_2':>5} {'ratio':>12} {'numer':>8} {'denom':>8}")
    for t3 in range(pairs // 3 + 1):
        t2 = pairs - 3 * t3
        t = {r: c for r, c in ((2, t2), (3, t3)) if c}
        out = chern_ratio_analysis(validate_profile(args.d, t))
        form = out["nodes_triples_form"]
        print(f"{t3:>4} {t2:>5} {str(out['ratio']):>12} "
              f"{form['numer']:>8} {form['denom']:>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
