"""Show that the coordinate flip preserves the tetrablock while a cyclic shift does not.

Prints the mu bracket of a fixed interior point, of its flip and of its cyclic
shift, next to the closed-form membership slack.
"""

import argparse

from mudomains.automorphisms import tetra_cyclic_shift, tetra_flip
from mudomains.mu_ssv import in_tetra, mu, tetra_realization
from mudomains.points import TetraPoint


def slack(x):
    return 1 - abs(x.x2) ** 2 - abs(x.x1 - x.x2.conjugate() * x.x3) - abs(x.x1 * x.x2 - x.x3)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--resolution", type=float, default=1e-6)
    args = parser.parse_args()

    x = TetraPoint(-0.495j, 0.5j, 0.99)
    for name, y in (("point", x), ("flip", tetra_flip(x)), ("cyclic shift", tetra_cyclic_shift(x))):
        b = mu(tetra_realization(y), "diag", args.resolution)
        print(
            f"{name:>12}: coords={[complex(round(c.real, 4), round(c.imag, 4)) for c in y.coords]} "
            f"mu=[{b.lower:.6f}, {b.upper:.6f}] slack={slack(y):+.4f} -> {in_tetra(y).value}"
        )


if __name__ == "__main__":
    main()
