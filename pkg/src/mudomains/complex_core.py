"""Blaschke factors and automorphisms of the unit disc.

Every automorphism is stored as ``v(z) = eta * B_alpha(z)`` with the factor

    B_alpha(z) = (z - alpha) / (conj(alpha) * z - 1)

Note the denominator ``conj(alpha) z - 1``: with this convention the identity
map is ``(eta, alpha) = (-1, 0)`` and the textbook form
``u (z - alpha) / (1 - conj(alpha) z)`` corresponds to ``eta = -u``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import CoincidentPoints, DegenerateDenominator, DomainError

UNIMODULAR_TOL = 1e-12
DENOMINATOR_TOL = 1e-14

# Points at which maps are compared for equality.
PROBE_POINTS = (0j, 0.5 + 0j, -0.5 + 0j, 0.5j, -0.5j, 0.3 + 0.4j)


def blaschke_factor(alpha: complex, z: complex) -> complex:
    alpha = complex(alpha)
    if not abs(alpha) < 1:
        raise DomainError(f"Blaschke zero must lie in the open disc, got {alpha!r}")
    den = alpha.conjugate() * z - 1
    if abs(den) < DENOMINATOR_TOL:
        raise DegenerateDenominator(f"conj(alpha) z - 1 vanishes at z={z!r}")
    return (z - alpha) / den


@dataclass(frozen=True)
class DiscAutomorphism:
    """``v(z) = eta * B_alpha(z)`` with ``|eta| = 1`` and ``|alpha| < 1``."""

    eta: complex = -1 + 0j
    alpha: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "eta", complex(self.eta))
        object.__setattr__(self, "alpha", complex(self.alpha))
        if abs(abs(self.eta) - 1) > UNIMODULAR_TOL:
            raise DomainError(f"eta must be unimodular, |eta|={abs(self.eta)!r}")
        if not abs(self.alpha) < 1:
            raise DomainError(f"alpha must lie in the open disc, |alpha|={abs(self.alpha)!r}")

    @classmethod
    def identity(cls) -> DiscAutomorphism:
        return cls(-1 + 0j, 0j)

    @classmethod
    def rotation(cls, c: complex) -> DiscAutomorphism:
        """The map ``z -> c z`` for unimodular ``c``."""
        c = complex(c)
        return cls(-c / abs(c), 0j)

    def __call__(self, z: complex) -> complex:
        return aut_eval(self, z)

    def matrix(self) -> np.ndarray:
        """Coefficient matrix ``[[a, b], [c, d]]`` of ``(a z + b) / (c z + d)``."""
        e, a = self.eta, self.alpha
        return np.array([[e, -e * a], [a.conjugate(), -1]], dtype=complex)

    def compose(self, other: DiscAutomorphism) -> DiscAutomorphism:
        return aut_compose(self, other)

    def inverse(self) -> DiscAutomorphism:
        return aut_inverse(self)


def aut_eval(v: DiscAutomorphism, z: complex) -> complex:
    if abs(z) > 1 + 1e-9:
        raise DomainError(f"|z|={abs(z)!r} exceeds the closed disc")
    return v.eta * blaschke_factor(v.alpha, z)


def from_matrix(m) -> DiscAutomorphism:
    """Normalize a Mobius coefficient matrix of a disc automorphism to ``(eta, alpha)``.

    ``alpha`` is the zero of the map and ``eta = -a/d`` (rescaled onto the circle).
    """
    a, b = complex(m[0][0]), complex(m[0][1])
    d = complex(m[1][1])
    if a == 0 or d == 0:
        raise DomainError("matrix does not represent a disc automorphism")
    alpha = -b / a
    eta = -a / d
    return DiscAutomorphism(eta / abs(eta), alpha)


def aut_compose(v: DiscAutomorphism, w: DiscAutomorphism) -> DiscAutomorphism:
    """``v o w`` (apply ``w`` first)."""
    return from_matrix(v.matrix() @ w.matrix())


def aut_inverse(v: DiscAutomorphism) -> DiscAutomorphism:
    (a, b), (c, d) = v.matrix()
    return from_matrix([[d, -b], [-c, a]])


def max_probe_error(f, g, probes=PROBE_POINTS) -> float:
    return max(abs(f(z) - g(z)) for z in probes)


def _triple_to_standard(z1, z2, z3) -> np.ndarray:
    # (z1, z2, z3) -> (0, inf, 1)
    return np.array(
        [[z3 - z2, -z1 * (z3 - z2)], [z3 - z1, -z2 * (z3 - z1)]], dtype=complex
    )


def _adjugate(m: np.ndarray) -> np.ndarray:
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex)


def _mobius(m: np.ndarray, z: complex) -> complex:
    den = m[1, 0] * z + m[1, 1]
    if den == 0:
        return complex(np.inf)
    return (m[0, 0] * z + m[0, 1]) / den


def two_point_boundary_aut(sources, targets, tol: float = 1e-9) -> DiscAutomorphism:
    """Disc automorphism sending ``sources[k]`` to ``targets[k]`` (all on the circle).

    The map is pinned by also sending the arc midpoint ``sqrt(z1 z2)`` of the
    sources to an arc midpoint of the targets, choosing the target midpoint for
    which the disc maps to itself.
    """
    s1, s2 = (complex(z) for z in sources)
    t1, t2 = (complex(z) for z in targets)
    for z in (s1, s2, t1, t2):
        if abs(abs(z) - 1) > tol:
            raise DomainError(f"point {z!r} is not on the unit circle")
    if abs(s1 - s2) < 1e-12 or abs(t1 - t2) < 1e-12:
        raise CoincidentPoints("two-point interpolation needs distinct points")

    ms = cmath.sqrt(s1 * s2)
    src = _triple_to_standard(s1, s2, ms)
    mt = cmath.sqrt(t1 * t2)
    best = None
    for m in (mt, -mt):
        full = _adjugate(_triple_to_standard(t1, t2, m)) @ src
        image0 = abs(_mobius(full, 0j))
        if best is None or image0 < best[0]:
            best = (image0, full)
    return from_matrix(best[1])
