"""Automorphism actions on the symmetrized bidisc, tetrablock and pentablock.

Conventions
-----------
* ``tau_v`` acts on ``Gamma_2`` by applying ``v`` to both roots.
* ``T_{v,chi}`` on the tetrablock uses ``v = -xi1 B_{z1}`` and
  ``chi = -xi2 B_{-conj(z2)}``; the flip ``F`` swaps the first two coordinates
  and, when requested, is applied before ``T``.
* ``f_{omega,v}`` on the pentablock rescales ``a`` and acts on ``(s, p)`` by ``tau_v``.

Composition and inversion of the tetrablock and pentablock families are
obtained from the action on a small invariant set and then confirmed on probe
points by the tests: on triangular points ``(x1, x2, x1 x2)`` the map
``T_{v,chi}`` acts coordinate-wise by two disc automorphisms, and on
``(a, s, p)`` the map ``f`` multiplies ``a`` by a cocycle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blaschke import BlaschkeProduct
from .complex_core import UNIMODULAR_TOL, DiscAutomorphism, aut_compose, aut_inverse
from .domains import (
    Region,
    classify_b_penta,
    classify_b_tetra,
    classify_gamma_n,
    symmetrize,
    unsymmetrize,
)
from .errors import DegenerateDenominator, DomainError, OutsideDomain
from .mu_ssv import mu, penta_realization, tetra_realization
from .points import Gamma2Point, GammaNPoint, PentaPoint, TetraPoint

GAMMA_DOMAIN_TOL = 1e-7
MU_DOMAIN_TOL = 1e-6
TETRA_DENOMINATOR_TOL = 1e-13
DENOMINATOR_TOL = 1e-14


def _unimodular(name, value) -> complex:
    value = complex(value)
    if abs(abs(value) - 1) > UNIMODULAR_TOL:
        raise DomainError(f"{name} must be unimodular, got modulus {abs(value)!r}")
    return value


def _in_disc(name, value) -> complex:
    value = complex(value)
    if not abs(value) < 1:
        raise DomainError(f"{name} must lie in the open disc, got modulus {abs(value)!r}")
    return value


# -- symmetrized bidisc and polydisc ------------------------------------------


def _check_gamma(c, tol=GAMMA_DOMAIN_TOL):
    if classify_gamma_n(c, tol).region is Region.OUTSIDE:
        raise OutsideDomain(f"{c} is not in the closed symmetrized polydisc")


def tau_apply(v: DiscAutomorphism, point: Gamma2Point, check: bool = True) -> Gamma2Point:
    """``(v(z1) + v(z2), v(z1) v(z2))`` for ``(s, p) = (z1 + z2, z1 z2)``.

    Expanded over the common denominator ``(conj(a) z1 - 1)(conj(a) z2 - 1)``
    so no roots are needed.
    """
    if check:
        _check_gamma(point)
    eta, al = v.eta, v.alpha
    s, p = point.s, point.p
    ac = al.conjugate()
    den = 1 - ac * s + ac * ac * p
    if abs(den) < DENOMINATOR_TOL:
        raise DegenerateDenominator("tau_v denominator vanishes")
    s_new = eta * (2 * ac * p - s - abs(al) ** 2 * s + 2 * al) / den
    p_new = eta * eta * (p - al * s + al * al) / den
    return Gamma2Point(s_new, p_new)


def tau_blaschke_apply(B: BlaschkeProduct, c: GammaNPoint) -> GammaNPoint:
    """``pi_n(B(z_1), ..., B(z_n))`` where ``z_i`` are the roots of ``c``."""
    if isinstance(c, Gamma2Point):
        c = GammaNPoint(c.coords)
    _check_gamma(c)
    roots = unsymmetrize(c)
    # roots within the domain tolerance outside the circle are pulled back onto it
    mod = np.abs(roots)
    roots = np.where(mod > 1, roots / np.where(mod > 0, mod, 1), roots)
    return symmetrize(B(roots))


# -- tetrablock ----------------------------------------------------------------


@dataclass(frozen=True)
class TetraAutParams:
    """Parameters of ``T_{v,chi}`` (or ``T_{v,chi} o F`` when ``flip``)."""

    xi1: complex = 1 + 0j
    z1: complex = 0j
    xi2: complex = 1 + 0j
    z2: complex = 0j
    flip: bool = False

    def __post_init__(self):
        object.__setattr__(self, "xi1", _unimodular("xi1", self.xi1))
        object.__setattr__(self, "xi2", _unimodular("xi2", self.xi2))
        object.__setattr__(self, "z1", _in_disc("z1", self.z1))
        object.__setattr__(self, "z2", _in_disc("z2", self.z2))
        object.__setattr__(self, "flip", bool(self.flip))

    @classmethod
    def identity(cls) -> TetraAutParams:
        return cls()

    @property
    def v(self) -> DiscAutomorphism:
        return DiscAutomorphism(-self.xi1, self.z1)

    @property
    def chi(self) -> DiscAutomorphism:
        return DiscAutomorphism(-self.xi2, -self.z2.conjugate())

    def triangular_maps(self) -> tuple[DiscAutomorphism, DiscAutomorphism]:
        """The maps ``x1 -> T_1`` and ``x2 -> T_2`` on triangular points (flip ignored).

        The first is ``v``; the second is ``x -> (xi2 x - z2) / (1 - xi2 conj(z2) x)``.
        """
        return self.v, DiscAutomorphism(-self.xi2, self.xi2.conjugate() * self.z2)

    @classmethod
    def from_triangular_maps(cls, m1: DiscAutomorphism, m2: DiscAutomorphism, flip=False) -> TetraAutParams:
        xi2 = -m2.eta
        return cls(-m1.eta, m1.alpha, xi2, xi2 * m2.alpha, flip)


def tetra_flip(x: TetraPoint) -> TetraPoint:
    return TetraPoint(x.x2, x.x1, x.x3)


def tetra_cyclic_shift(x: TetraPoint) -> TetraPoint:
    """``(x2, x3, x1)``. Not an automorphism; kept to exhibit a counterexample."""
    return TetraPoint(x.x2, x.x3, x.x1)


def _check_tetra(x: TetraPoint):
    if classify_b_tetra(x).on_boundary:
        return
    bracket = mu(tetra_realization(x), "diag")
    if bracket.lower > 1 + MU_DOMAIN_TOL:
        raise OutsideDomain(f"{x} is not in the closed tetrablock (mu >= {bracket.lower:.6g})")


def tetra_apply(t: TetraAutParams, x: TetraPoint, check: bool = True) -> TetraPoint:
    if check:
        _check_tetra(x)
    if t.flip:
        x = tetra_flip(x)
    xi1, z1, xi2, z2 = t.xi1, t.z1, t.xi2, t.z2
    x1, x2, x3 = x.x1, x.x2, x.x3
    z1c, z2c = z1.conjugate(), z2.conjugate()
    den = (1 - z1c * x1) - xi2 * z2c * (x2 - z1c * x3)
    if abs(den) < TETRA_DENOMINATOR_TOL:
        raise DegenerateDenominator("tetrablock automorphism denominator vanishes")
    t1 = xi1 * ((x1 - z1) + xi2 * z2c * (z1 * x2 - x3)) / den
    t2 = (z2 * (z1c * x1 - 1) + xi2 * (x2 - z1c * x3)) / den
    t3 = xi1 * (z2 * (z1 - x1) - xi2 * (z1 * x2 - x3)) / den
    return TetraPoint(t1, t2, t3)


def _swap(t: TetraAutParams) -> TetraAutParams:
    """Parameters of ``F o T o F``: the two coordinate maps trade places."""
    m1, m2 = t.triangular_maps()
    return TetraAutParams.from_triangular_maps(m2, m1)


def tetra_compose(a: TetraAutParams, b: TetraAutParams) -> TetraAutParams:
    """Parameters of ``a o b`` (apply ``b`` first)."""
    if a.flip:
        # T_a F T_b F^f = T_a T_{swap b} F^{1+f}
        b_core = _swap(TetraAutParams(b.xi1, b.z1, b.xi2, b.z2))
    else:
        b_core = TetraAutParams(b.xi1, b.z1, b.xi2, b.z2)
    a1, a2 = a.triangular_maps()
    b1, b2 = b_core.triangular_maps()
    return TetraAutParams.from_triangular_maps(aut_compose(a1, b1), aut_compose(a2, b2), a.flip != b.flip)


def tetra_inverse(t: TetraAutParams) -> TetraAutParams:
    m1, m2 = t.triangular_maps()
    core = TetraAutParams.from_triangular_maps(aut_inverse(m1), aut_inverse(m2))
    if not t.flip:
        return core
    # (T F)^{-1} = F T^{-1} = T_{swap} F
    swapped = _swap(core)
    return TetraAutParams(swapped.xi1, swapped.z1, swapped.xi2, swapped.z2, True)


# -- pentablock ----------------------------------------------------------------


@dataclass(frozen=True)
class PentaAutParams:
    omega: complex = -1 + 0j
    v: DiscAutomorphism = DiscAutomorphism()

    def __post_init__(self):
        object.__setattr__(self, "omega", _unimodular("omega", self.omega))

    @classmethod
    def identity(cls) -> PentaAutParams:
        # the identity disc map has eta = -1, so omega = -1 leaves a alone
        return cls(-1 + 0j, DiscAutomorphism.identity())


def penta_factor(v: DiscAutomorphism, s: complex, p: complex) -> complex:
    """``eta (1 - |alpha|^2) / (1 - conj(alpha) s + conj(alpha)^2 p)``."""
    ac = v.alpha.conjugate()
    den = 1 - ac * s + ac * ac * p
    if abs(den) < DENOMINATOR_TOL:
        raise DegenerateDenominator("pentablock automorphism denominator vanishes")
    return v.eta * (1 - abs(v.alpha) ** 2) / den


def _check_penta(q: PentaPoint):
    if classify_b_penta(q).on_boundary:
        return
    _check_gamma(Gamma2Point(q.s, q.p))
    bracket = mu(penta_realization(q), "penta")
    if bracket.lower > 1 + MU_DOMAIN_TOL:
        raise OutsideDomain(f"{q} is not in the closed pentablock (mu >= {bracket.lower:.6g})")


def penta_apply(f: PentaAutParams, q: PentaPoint, check: bool = True) -> PentaPoint:
    if check:
        _check_penta(q)
    a_new = f.omega * penta_factor(f.v, q.s, q.p) * q.a
    g = tau_apply(f.v, Gamma2Point(q.s, q.p), check=False)
    return PentaPoint(a_new, g.s, g.p)


def _cocycle(v1: DiscAutomorphism, v2: DiscAutomorphism, v3: DiscAutomorphism) -> complex:
    """``c_{v1}(tau_{v2}(0,0)) c_{v2}(0,0) / c_{v3}(0,0)`` for ``v3 = v1 o v2``."""
    g = tau_apply(v2, Gamma2Point(0, 0), check=False)
    k = penta_factor(v1, g.s, g.p) * penta_factor(v2, 0, 0) / penta_factor(v3, 0, 0)
    return k / abs(k)


def penta_compose(f1: PentaAutParams, f2: PentaAutParams) -> PentaAutParams:
    """Parameters of ``f1 o f2`` (apply ``f2`` first)."""
    v3 = aut_compose(f1.v, f2.v)
    omega = f1.omega * f2.omega * _cocycle(f1.v, f2.v, v3)
    return PentaAutParams(omega / abs(omega), v3)


def penta_inverse(f: PentaAutParams) -> PentaAutParams:
    vi = aut_inverse(f.v)
    k = _cocycle(vi, f.v, aut_compose(vi, f.v))
    omega = -1 / (f.omega * k)
    return PentaAutParams(omega / abs(omega), vi)


def gamma2_compose(v: DiscAutomorphism, w: DiscAutomorphism) -> DiscAutomorphism:
    """``tau_v o tau_w = tau_{v o w}``."""
    return aut_compose(v, w)


def gamma2_inverse(v: DiscAutomorphism) -> DiscAutomorphism:
    return aut_inverse(v)
