"""Tabulate Lebesgue constant estimates against (log n)^3."""

import argparse
import math
import time

from cubelattice.interpolation import lebesgue_estimate
from cubelattice.lattice_core import xi_count


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dim", type=int, choices=(2, 3), default=2)
    parser.add_argument("--n", type=int, nargs="+", default=[4, 8, 16, 32])
    parser.add_argument("--grid-factor", type=int, default=4, help="grid points per axis = factor * n")
    args = parser.parse_args()

    print(f"{'n':>4} {'nodes':>7} {'estimate':>10} {'/log^2':>8} {'/log^3':>8} {'sec':>6}")
    for n in args.n:
        start = time.perf_counter()
        est = lebesgue_estimate(args.dim, n, args.grid_factor * n)
        elapsed = time.perf_counter() - start
        log = math.log(n)
        print(f"{n:>4} {xi_count(args.dim, n):>7} {est:>10.5f} {est / log**2:>8.4f} {est / log**3:>8.4f} {elapsed:>6.2f}")


if __name__ == "__main__":
    main()
