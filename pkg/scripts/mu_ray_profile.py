"""Trace mu along the ray t -> t x for a tetrablock or pentablock point.

The point lies on the boundary of the domain exactly where the mu bracket
crosses 1, so the printout shows where the ray leaves the domain.
"""

import argparse
import json

import numpy as np

from mudomains.mu_ssv import mu, penta_realization, tetra_realization
from mudomains.serialize import decode_point


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("point", help='JSON point, e.g. \'{"kind": "tetra", "coords": [[0.5, 0], [0.5, 0], [0, 0]]}\'')
    parser.add_argument("--steps", type=int, default=11)
    parser.add_argument("--tmax", type=float, default=2.0)
    parser.add_argument("--resolution", type=float, default=1e-4)
    args = parser.parse_args()

    x = decode_point(json.loads(args.point))
    if x.kind == "tetra":
        realize, structure = tetra_realization, "diag"
    elif x.kind == "penta":
        realize, structure = penta_realization, "penta"
    else:
        parser.error("point must be of kind tetra or penta")

    for t in np.linspace(0, args.tmax, args.steps):
        # (x1, x2, x3) scales as (t, t, t^2) for the tetrablock and (a, s, p) as (t, t, t^2)
        y = type(x)(t * x.coords[0], t * x.coords[1], t * t * x.coords[2])
        b = mu(realize(y), structure, args.resolution)
        side = "inside" if b.upper < 1 else "outside" if b.lower > 1 else "band"
        print(f"t={t:6.3f}  mu=[{b.lower:.5f}, {b.upper:.5f}]  {side}")


if __name__ == "__main__":
    main()
