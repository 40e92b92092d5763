"""Orbit decomposition of distinguished-boundary points.

Each solver takes a boundary point, decides its stratum, and returns
automorphism parameters mapping the stratum's canonical point onto it. The
reported residual is the max coordinate error of that round trip, so a
decomposition is self-certifying.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .automorphisms import (
    PentaAutParams,
    TetraAutParams,
    penta_apply,
    tau_apply,
    tau_blaschke_apply,
    tetra_apply,
)
from .blaschke import BlaschkeProduct, InterpConfig, interpolate_roots_of_unity, roots_of_unity
from .complex_core import DiscAutomorphism, two_point_boundary_aut
from .domains import (
    DEFAULT_TOL,
    PentaStratum,
    TetraStratum,
    classify_b_penta,
    classify_b_tetra,
    classify_gamma_n,
    royal_gamma2,
    symmetrize,
    unsymmetrize,
)
from .errors import InternalInconsistency, NotOnBoundary
from .points import Gamma2Point, GammaNPoint, PentaPoint, TetraPoint, coord_distance

# tolerance on | |a| - |a~| | before it is treated as a bug
A_TILDE_TOL = 1e-7

CANONICAL = {
    "RoyalGamma2": Gamma2Point(2, 1),
    "NonRoyalGamma2": Gamma2Point(0, 1),
    "TriangularE": TetraPoint(1, 1, 1),
    "NonTriangularE": TetraPoint(0, 0, 1),
    "RoyalP": PentaPoint(0, 2, 1),
    "NonRoyalP": PentaPoint(1, 0, 1),
}

Params = Union[DiscAutomorphism, TetraAutParams, PentaAutParams, BlaschkeProduct]


@dataclass(frozen=True)
class Decomposition:
    stratum: str
    params: Params
    canonical: object
    residual: float


def _phase(z: complex) -> complex:
    return z / abs(z)


def _by_argument(roots) -> list:
    """Unit-normalized roots sorted by argument in ``[0, 2 pi)``, so ``(i, -i)`` keeps its order."""
    return sorted((_phase(z) for z in roots), key=lambda z: np.angle(z) % (2 * np.pi))


def _gamma2_aut(point: Gamma2Point, royal: bool) -> DiscAutomorphism:
    if royal:
        # v(1) = s/2 is achieved by a rotation
        return DiscAutomorphism.rotation(_phase(point.s / 2))
    return two_point_boundary_aut((1j, -1j), _by_argument(unsymmetrize(point)))


def decompose_b_gamma2(point: Gamma2Point, tol: float = DEFAULT_TOL) -> Decomposition:
    if not classify_gamma_n(point, tol).on_boundary:
        raise NotOnBoundary(f"{point} is not on the distinguished boundary of Gamma_2")
    royal = royal_gamma2(point, tol)
    label = "RoyalGamma2" if royal else "NonRoyalGamma2"
    v = _gamma2_aut(point, royal)
    canonical = CANONICAL[label]
    residual = coord_distance(tau_apply(v, canonical, check=False), point)
    return Decomposition(label, v, canonical, residual)


def decompose_b_tetra(x: TetraPoint, tol: float = DEFAULT_TOL) -> Decomposition:
    stratum = classify_b_tetra(x, tol).stratum
    if stratum is TetraStratum.NOT_BOUNDARY:
        raise NotOnBoundary(f"{x} is not on the distinguished boundary of the tetrablock")
    if stratum is TetraStratum.TRIANGULAR:
        label = "TriangularE"
        params = TetraAutParams(_phase(x.x1), 0, _phase(x.x2), 0)
    else:
        label = "NonTriangularE"
        xi1 = _phase(x.x3)
        params = TetraAutParams(xi1, -x.x1 * xi1.conjugate(), 1, 0)
    canonical = CANONICAL[label]
    residual = coord_distance(tetra_apply(params, canonical, check=False), x)
    return Decomposition(label, params, canonical, residual)


def a_tilde(v: DiscAutomorphism) -> complex:
    """First coordinate of ``f_{1,v}(1, 0, 1)``: ``eta (1 - |alpha|^2) / (1 + conj(alpha)^2)``."""
    return v.eta * (1 - abs(v.alpha) ** 2) / (1 + v.alpha.conjugate() ** 2)


def decompose_b_penta(q: PentaPoint, tol: float = DEFAULT_TOL) -> Decomposition:
    stratum = classify_b_penta(q, tol).stratum
    if stratum is PentaStratum.NOT_BOUNDARY:
        raise NotOnBoundary(f"{q} is not on the distinguished boundary of the pentablock")
    g = Gamma2Point(q.s, q.p)
    if stratum is PentaStratum.ROYAL:
        label = "RoyalP"
        # any omega works since a = 0; pinned to 1
        params = PentaAutParams(1, _gamma2_aut(g, royal=True))
    else:
        label = "NonRoyalP"
        v = _gamma2_aut(g, royal=False)
        at = a_tilde(v)
        if abs(abs(q.a) - abs(at)) > A_TILDE_TOL:
            raise InternalInconsistency(f"|a| = {abs(q.a):.12g} but |a~| = {abs(at):.12g}")
        params = PentaAutParams(_phase(q.a / at), v)
    canonical = CANONICAL[label]
    residual = coord_distance(penta_apply(params, canonical, check=False), q)
    return Decomposition(label, params, canonical, residual)


def decompose_b_gamma_n(
    c: GammaNPoint, tol: float = DEFAULT_TOL, config: InterpConfig = InterpConfig()
) -> Decomposition:
    if isinstance(c, Gamma2Point):
        c = GammaNPoint(c.coords)
    if not classify_gamma_n(c, tol).on_boundary:
        raise NotOnBoundary(f"{c} is not on the distinguished boundary of Gamma_{c.n}")
    targets = _by_argument(unsymmetrize(c))
    B = interpolate_roots_of_unity(targets, config)
    canonical = symmetrize(roots_of_unity(c.n))
    residual = coord_distance(tau_blaschke_apply(B, canonical), c)
    return Decomposition("BGammaN", B, canonical, residual)


def decompose(point, tol: float = DEFAULT_TOL) -> Decomposition:
    """Dispatch on the point type."""
    if isinstance(point, Gamma2Point):
        return decompose_b_gamma2(point, tol)
    if isinstance(point, GammaNPoint):
        if point.n == 2:
            return decompose_b_gamma2(Gamma2Point(*point.coeffs), tol)
        return decompose_b_gamma_n(point, tol)
    if isinstance(point, TetraPoint):
        return decompose_b_tetra(point, tol)
    if isinstance(point, PentaPoint):
        return decompose_b_penta(point, tol)
    raise TypeError(f"cannot decompose {type(point).__name__}")
