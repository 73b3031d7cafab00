#!/usr/bin/env python3
"""Certified multiplier intervals for the anti-triangular masks.

For each dyadic level k the Schur-multiplier norm of the size-(2^k + 1)
0/1 Hankel mask on S_p is bracketed by a constructive witness ratio from
below and an analytic quadrature bound from above.  An optional randomized
search (deterministic per seed) can tighten the lower end.
"""

import argparse
import sys

from tritrunc import (
    delta_lower_bound,
    delta_matrix,
    dirichlet_witness_upper,
    embed,
    random_witness_search,
    witness_embed_size,
)
from tritrunc.experiments import DEFAULT_SEED


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kmin", type=int, default=2)
    parser.add_argument("--kmax", type=int, default=7)
    parser.add_argument("--p", type=float, default=0.5, help="Schatten exponent in (0, 1]")
    parser.add_argument("--budget", type=int, default=0, help="randomized search evaluations per level")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser.parse_args(argv)


def main(argv=None):
    args = parse_args(argv)
    if args.kmin < 1 or args.kmin > args.kmax:
        print("error: need 1 <= kmin <= kmax", file=sys.stderr)
        return 2

    print(f"p = {args.p:g}; interval [constructive lower, analytic upper]")
    print(f"{'k':>3} {'size':>6} {'lower':>14} {'upper':>14} {'upper/lower':>12}")
    for k in range(args.kmin, args.kmax + 1):
        lower = delta_lower_bound(k, args.p).ratio
        if args.budget > 0:
            size = witness_embed_size(k)
            mask = embed(delta_matrix(2**k + 1), size)
            found = random_witness_search(mask, args.p, args.budget, args.seed)
            lower = max(lower, found.ratio)
        upper = dirichlet_witness_upper(k, args.p)
        print(f"{k:>3} {2**k + 1:>6} {lower:>14.6f} {upper:>14.6f} {upper / lower:>12.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
