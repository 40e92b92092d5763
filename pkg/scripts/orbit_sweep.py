"""Decompose random distinguished-boundary points and report round-trip residuals per stratum."""

import argparse
import time
from collections import defaultdict

import numpy as np

from mudomains.domains import sample_points
from mudomains.orbits import decompose

STRATA = ("bGamma2", "bTetra", "bPenta", "bGammaN")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=2000)
    parser.add_argument("--n", type=int, default=4, help="number of roots for bGammaN")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    for label in STRATA:
        count = args.samples if label != "bGammaN" else max(1, args.samples // 20)
        start = time.perf_counter()
        residuals = defaultdict(list)
        for x in sample_points(label, count, n=args.n, seed=args.seed):
            d = decompose(x)
            residuals[d.stratum].append(d.residual)
        elapsed = time.perf_counter() - start
        for stratum, r in sorted(residuals.items()):
            r = np.asarray(r)
            print(
                f"{label:>8} -> {stratum:<15} count={len(r):>6} "
                f"max={r.max():.2e} p99={np.quantile(r, 0.99):.2e} ({elapsed:.1f}s)"
            )


if __name__ == "__main__":
    main()
