"""Measure how many colors the spiral labelings force as they grow.

Prints exact minimum palette sizes at threshold 1 (oracle-measured) next to
the two published-style lower bounds for the square family: the linear one
and the half-length chain the inductive argument constructs.

Run:  python3 scripts/spiral_growth.py [--max-n 7]
"""

from __future__ import annotations

import argparse
import sys
import time

sys.path.insert(0, "src")

from happy_edges.hardness import build_dual_spiral, build_square_spiral
from happy_edges.solver import min_colors


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--dual-sizes", type=int, default=2)
    args = parser.parse_args()

    print("square spirals (t=1):")
    n = 1
    while n <= args.max_n:
        g = build_square_spiral(n)
        start = time.time()
        result = min_colors(g, t=1, r_max=n + 3)
        value = result[0] if result else f">{n + 3}"
        print(
            f"  n={n}: {g.vertex_count:3d} vertices, min colors = {value}"
            f"  [linear bound {n}, chain bound {(n + 1) // 2}]"
            f"  ({time.time() - start:.1f}s)"
        )
        n += 2

    for family in ("d3464", "d3636"):
        print(f"{family} spirals (t=1):")
        for size in range(1, args.dual_sizes + 1):
            g = build_dual_spiral(family, size)
            start = time.time()
            result = min_colors(g, t=1, r_max=9)
            value = result[0] if result else ">9"
            print(
                f"  size={size}: {g.vertex_count:3d} vertices, "
                f"min colors = {value}  ({time.time() - start:.1f}s)"
            )


if __name__ == "__main__":
    main()
