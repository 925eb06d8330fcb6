"""Node counts of the lattice W0 rule against the tensor Gauss-Chebyshev rule of equal exactness.

Both rules integrate every T-product of degree up to 2n - 1 (total degree in
2D, pairwise sums in 3D). The tensor rule needs n points per axis.
"""

import argparse

import numpy as np

from cubelattice import oracle
from cubelattice.cubature import apply, w0_rule


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dim", type=int, choices=(2, 3), default=3)
    parser.add_argument("--n", type=int, nargs="+", default=[2, 4, 8, 12, 16])
    args = parser.parse_args()

    f = lambda p: np.exp(p.sum(axis=-1))
    reference = oracle.reference_quadrature(f, args.dim, 40)
    print(f"{'n':>4} {'lattice':>8} {'tensor':>8} {'ratio':>6} {'lattice err':>12} {'tensor err':>12}")
    for n in args.n:
        rule = w0_rule(args.dim, n)
        tensor = n**args.dim
        err_lattice = abs(apply(rule, f, vectorized=True) - reference)
        err_tensor = abs(oracle.reference_quadrature(f, args.dim, n) - reference)
        print(f"{n:>4} {len(rule):>8} {tensor:>8} {len(rule) / tensor:>6.3f} {err_lattice:>12.3e} {err_tensor:>12.3e}")


if __name__ == "__main__":
    main()
