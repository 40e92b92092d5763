"""Classifiers and samplers for the symmetrized polydisc, tetrablock and pentablock.

Only boundary strata are decided here; they have closed forms. Membership of
the open tetrablock and pentablock goes through :mod:`mudomains.mu_ssv`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InternalInconsistency, SolverFailure, UnknownStratum
from .matrix2 import Mat2, project_penta, project_tetra, quadratic_roots
from .points import Gamma2Point, GammaNPoint, PentaPoint, TetraPoint

DEFAULT_TOL = 1e-9
ROOT_RESIDUAL_TOL = 1e-7


@dataclass(frozen=True)
class Tolerance:
    eps: float = DEFAULT_TOL

    def __post_init__(self):
        if not self.eps > 0:
            raise ValueError("tolerance must be positive")


# -- symmetrization ---------------------------------------------------------


def symmetrize(z) -> GammaNPoint:
    """Elementary symmetric values of ``z`` via ``prod (t - z_i)``."""
    z = [complex(v) for v in np.atleast_1d(z)]
    if not z:
        raise ValueError("need at least one point")
    poly = [1 + 0j]
    for root in z:
        poly = [a - root * b for a, b in zip(poly + [0j], [0j] + poly)]
    return GammaNPoint(tuple((-1) ** k * poly[k] for k in range(1, len(poly))))


def _monic(c: GammaNPoint) -> np.ndarray:
    return np.array([1] + [(-1) ** k * e for k, e in enumerate(c.coeffs, 1)], dtype=complex)


def unsymmetrize(c) -> np.ndarray:
    """Roots of ``t^n - e1 t^{n-1} + e2 t^{n-2} - ... + (-1)^n e_n``."""
    if isinstance(c, Gamma2Point):
        c = GammaNPoint(c.coords)
    if c.n == 1:
        roots = np.array([c.coeffs[0]])
    elif c.n == 2:
        roots = np.array(quadratic_roots(*c.coeffs))
    else:
        roots = np.roots(_monic(c))
    poly = _monic(c)
    for r in roots:
        scale = np.sum(np.abs(poly) * abs(r) ** np.arange(c.n, -1, -1))
        if abs(np.polyval(poly, r)) > ROOT_RESIDUAL_TOL * max(1.0, scale):
            raise SolverFailure(f"root {r!r} has residual {abs(np.polyval(poly, r)):.3g}")
    return roots


def _cluster_moduli(roots, poly) -> np.ndarray:
    """Root moduli with each tight root cluster replaced by its geometric mean modulus.

    An ``m``-fold root ``c`` of ``p`` comes back from floating point as ``m``
    roots spread over a radius of about ``(eps S / |q|)**(1/m)``, where ``S``
    bounds the coefficients and ``q = p^(m)(c) / m!``. Individual roots are
    then ill-conditioned, but the product of the cluster is not. Clusters are
    searched from the largest size down; a group is merged when it fits in a
    hundred times that radius around its centroid and every other root lies
    more than three spreads away. The geometric mean is used because
    it stays exactly 1 when distinct unimodular roots happen to be merged.
    """
    roots = np.asarray(roots, dtype=complex)
    poly = np.asarray(poly, dtype=complex)
    n = len(roots)
    out = np.abs(roots)
    free = np.ones(n, dtype=bool)
    eps = np.finfo(float).eps
    scale = float(np.sum(np.abs(poly)))
    for m in range(n, 1, -1):
        taylor = np.polyder(poly, m) / math.factorial(m)
        for i in range(n):
            if not free[i] or free.sum() < m:
                continue
            idx = np.flatnonzero(free)
            near = idx[np.argsort(np.abs(roots[idx] - roots[i]))[:m]]
            centre = roots[near].mean()
            lead = abs(np.polyval(taylor, centre))
            if lead == 0:
                continue
            radius = min(0.1, 100 * (eps * scale / lead) ** (1 / m))
            spread = np.max(np.abs(roots[near] - centre))
            rest = np.delete(roots, near)
            isolated = rest.size == 0 or np.min(np.abs(rest - centre)) > 3 * spread
            if spread <= radius and isolated:
                out[near] = np.prod(np.abs(roots[near])) ** (1 / m)
                free[near] = False
    return out


# -- symmetrized polydisc ----------------------------------------------------


class Region(str, Enum):
    INTERIOR = "interior"
    CLOSURE = "closure"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class GammaClass:
    region: Region
    on_boundary: bool
    defect: float
    royal: bool | None = None
    algebraic_on_boundary: bool | None = None


def b_gamma2_algebraic(point: Gamma2Point, tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    """``|s| <= 2``, ``s = conj(s) p``, ``|p| = 1``, with the largest violation."""
    s, p = point.s, point.p
    defect = max(abs(s) - 2, abs(s - s.conjugate() * p), abs(abs(p) - 1))
    return defect <= tol, max(defect, 0.0)


def royal_gamma2(point: Gamma2Point, tol: float = DEFAULT_TOL) -> bool:
    return abs(point.s * point.s - 4 * point.p) <= tol


def classify_gamma_n(c, tol: float = DEFAULT_TOL) -> GammaClass:
    if isinstance(c, Gamma2Point):
        c = GammaNPoint(c.coords)
    moduli = _cluster_moduli(unsymmetrize(c), _monic(c))
    if np.all(moduli < 1 - tol):
        region = Region.INTERIOR
    elif np.all(moduli <= 1 + tol):
        region = Region.CLOSURE
    else:
        region = Region.OUTSIDE
    defect = float(np.max(np.abs(moduli - 1)))
    on_boundary = defect <= tol
    if c.n != 2:
        return GammaClass(region, on_boundary, defect)
    g2 = Gamma2Point(*c.coeffs)
    return GammaClass(region, on_boundary, defect, royal_gamma2(g2, tol), b_gamma2_algebraic(g2, tol)[0])


# -- tetrablock ---------------------------------------------------------------


class TetraStratum(str, Enum):
    NOT_BOUNDARY = "notBoundary"
    NON_TRIANGULAR = "boundaryNonTriangular"
    TRIANGULAR = "boundaryTriangular"


@dataclass(frozen=True)
class TetraClass:
    stratum: TetraStratum
    defect: float

    @property
    def on_boundary(self) -> bool:
        return self.stratum is not TetraStratum.NOT_BOUNDARY


def classify_b_tetra(x: TetraPoint, tol: float = DEFAULT_TOL) -> TetraClass:
    """Distinguished boundary: ``x1 = conj(x2) x3``, ``|x3| = 1``, ``|x1| <= 1``."""
    defect = max(
        abs(x.x1 - x.x2.conjugate() * x.x3),
        abs(abs(x.x3) - 1),
        abs(x.x1) - 1,
        0.0,
    )
    if defect > tol:
        return TetraClass(TetraStratum.NOT_BOUNDARY, defect)
    if abs(x.x1 * x.x2 - x.x3) <= tol:
        return TetraClass(TetraStratum.TRIANGULAR, defect)
    return TetraClass(TetraStratum.NON_TRIANGULAR, defect)


# -- pentablock ---------------------------------------------------------------


class PentaStratum(str, Enum):
    NOT_BOUNDARY = "notBoundary"
    ROYAL = "boundaryRoyal"
    NON_ROYAL = "boundaryNonRoyal"


@dataclass(frozen=True)
class PentaClass:
    stratum: PentaStratum
    defect: float

    @property
    def on_boundary(self) -> bool:
        return self.stratum is not PentaStratum.NOT_BOUNDARY


def classify_b_penta(q: PentaPoint, tol: float = DEFAULT_TOL) -> PentaClass:
    """Distinguished boundary: ``|a|^2 + |s|^2/4 = 1`` and ``(s, p)`` on the bidisc boundary."""
    _, g_defect = b_gamma2_algebraic(Gamma2Point(q.s, q.p), tol)
    defect = max(abs(abs(q.a) ** 2 + abs(q.s) ** 2 / 4 - 1), g_defect)
    if defect > tol:
        return PentaClass(PentaStratum.NOT_BOUNDARY, defect)
    if abs(q.s * q.s - 4 * q.p) <= tol:
        # |p| = 1 and s^2 = 4p force |s| = 2, hence a = 0; within tolerance
        # that leaves |a|^2 <= 2.25 tol
        if abs(q.a) > 1.5 * math.sqrt(tol) + tol:
            raise InternalInconsistency(f"royal boundary point with |a| = {abs(q.a):.3g}")
        return PentaClass(PentaStratum.ROYAL, defect)
    return PentaClass(PentaStratum.NON_ROYAL, defect)


# -- samplers -----------------------------------------------------------------

SAMPLE_LABELS = (
    "bGamma2",
    "bGamma2Royal",
    "bGamma2NonRoyal",
    "Gamma2Interior",
    "bGammaN",
    "GammaNInterior",
    "bTetra",
    "bTetraTriangular",
    "bTetraNonTriangular",
    "TetraInterior",
    "bPenta",
    "bPentaRoyal",
    "bPentaNonRoyal",
    "PentaInterior",
)

# interior samplers stay this far inside so they are not confused with the boundary
_INTERIOR_RADIUS = 0.999


def _unit(rng) -> complex:
    return complex(np.exp(2j * np.pi * rng.random()))


def _disc(rng, radius=_INTERIOR_RADIUS) -> complex:
    return radius * math.sqrt(rng.random()) * _unit(rng)


def _contraction(rng, radius=_INTERIOR_RADIUS) -> Mat2:
    m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    m *= radius * math.sqrt(rng.random()) / np.linalg.norm(m, 2)
    return Mat2.from_array(m)


def _draw(label, n, rng):
    if label == "bGamma2":
        label = "bGamma2Royal" if rng.random() < 0.5 else "bGamma2NonRoyal"
    elif label == "bTetra":
        label = "bTetraTriangular" if rng.random() < 0.5 else "bTetraNonTriangular"
    elif label == "bPenta":
        label = "bPentaRoyal" if rng.random() < 0.5 else "bPentaNonRoyal"

    if label == "bGamma2Royal":
        z = _unit(rng)
        return Gamma2Point(2 * z, z * z)
    if label == "bGamma2NonRoyal":
        z1, z2 = _unit(rng), _unit(rng)
        return Gamma2Point(z1 + z2, z1 * z2)
    if label == "Gamma2Interior":
        z1, z2 = _disc(rng), _disc(rng)
        return Gamma2Point(z1 + z2, z1 * z2)
    if label == "bGammaN":
        return symmetrize([_unit(rng) for _ in range(n)])
    if label == "GammaNInterior":
        return symmetrize([_disc(rng) for _ in range(n)])
    if label == "bTetraTriangular":
        x1, x2 = _unit(rng), _unit(rng)
        return TetraPoint(x1, x2, x1 * x2)
    if label == "bTetraNonTriangular":
        x1, x3 = _disc(rng), _unit(rng)
        return TetraPoint(x1, x1.conjugate() * x3, x3)
    if label == "TetraInterior":
        return project_tetra(_contraction(rng))
    if label == "bPentaRoyal":
        z = _unit(rng)
        return PentaPoint(0, 2 * z, z * z)
    if label == "bPentaNonRoyal":
        z1, z2 = _unit(rng), _unit(rng)
        s = z1 + z2
        a = math.sqrt(max(0.0, 1 - abs(s) ** 2 / 4)) * _unit(rng)
        return PentaPoint(a, s, z1 * z2)
    if label == "PentaInterior":
        return project_penta(_contraction(rng))
    raise UnknownStratum(label)


def sample_points(label: str, count: int, n: int = 2, seed: int = 0) -> list:
    if label not in SAMPLE_LABELS:
        raise UnknownStratum(label)
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = np.random.default_rng(seed)
    return [_draw(label, n, rng) for _ in range(count)]


def sample_stratum(label: str, n: int = 2, seed: int = 0):
    return sample_points(label, 1, n, seed)[0]
