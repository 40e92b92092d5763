"""Structured singular value of 2x2 matrices for four perturbation structures.

``mu_E(A) = 1 / inf{ ||X|| : X in E, det(I - A X) = 0 }`` with ``mu = 0`` when
no ``X`` in ``E`` makes ``I - A X`` singular.

* ``full``   -- all 2x2 matrices: ``mu = ||A||``.
* ``scalar`` -- multiples of the identity: ``mu = r(A)``.
* ``diag``   -- diagonal ``X``; ``det(I - A X) = 1 - a11 x1 - a22 x2 + det(A) x1 x2``.
* ``penta``  -- ``X = x I + y E12``; ``det(I - A X) = 1 - tr(A) x + det(A) x^2 - a21 y``.

The two structured cases are solved by branch and bound over the modulus of
the free variable. The remaining variable is eliminated in closed form, and
every radial interval gets a rigorous lower bound on the objective, so the
returned bracket holds regardless of how far the refinement got.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .matrix2 import Mat2, op_norm, quadratic_roots, spectral_radius
from .points import PentaPoint, TetraPoint


class Structure(str, Enum):
    FULL = "full"
    SCALAR = "scalar"
    DIAG = "diag"
    PENTA = "penta"


class Membership(str, Enum):
    INSIDE = "inside"
    BOUNDARY_BAND = "boundaryBand"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class MuBracket:
    lower: float
    upper: float
    structure: Structure
    converged: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lower", float(self.lower))
        object.__setattr__(self, "upper", float(self.upper))
        object.__setattr__(self, "structure", Structure(self.structure))
        object.__setattr__(self, "converged", bool(self.converged))

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def mid(self) -> float:
        return 0.5 * (self.lower + self.upper)


@dataclass(frozen=True)
class MuConfig:
    n_radii: int = 64
    max_levels: int = 80
    max_cells: int = 200_000


def mu(A: Mat2, structure="diag", resolution: float = 1e-4, config: MuConfig = MuConfig()) -> MuBracket:
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    structure = Structure(structure)
    if structure is Structure.FULL:
        v = op_norm(A)
        return MuBracket(v, v, structure)
    if structure is Structure.SCALAR:
        v = spectral_radius(A)
        return MuBracket(v, v, structure)
    # unit norm first so the determinant cannot underflow; the absolute width
    # target is divided by the same factor
    t = op_norm(A)
    if t == 0:
        return MuBracket(0, 0, structure)
    B = Mat2(A.a11 / t, A.a12 / t, A.a21 / t, A.a22 / t)
    if structure is Structure.DIAG:
        b = mu_diag(B.a11, B.a22, B.det, resolution / t, config)
    else:
        b = mu_penta(B.a21, B.trace, B.det, resolution / t, config)
    return MuBracket(t * b.lower, t * b.upper, b.structure, b.converged)


# -- objectives -------------------------------------------------------------
#
# Both problems have a single free complex variable x once the constraint is
# solved for the other one. Writing x = r e^{i theta}, the minimum over theta
# of the eliminated variable's modulus is computed exactly, which reduces the
# search to the radius r. For an annulus r0 <= |x| <= r1 the minimum modulus
# principle bounds that modulus from below by its values on the two boundary
# circles, unless a zero lies in the annulus.

_SLACK = 1e-12
# after normalization, coefficients below this are flushed to zero; squaring them
# would leave the normal range, and mu depends continuously on them
_TINY = 1e-150


def _normalize(lin, quad):
    """Scale coefficients that are homogeneous of degree 1 (``lin``) and 2 (``quad``).

    Returns the scale ``t`` and the coefficients of ``A / t``, so that the
    largest of ``|lin|`` and ``sqrt|quad|`` becomes 1.
    """
    t = max([abs(z) for z in lin] + [math.sqrt(abs(z)) for z in quad])
    if t == 0:
        return 0.0, lin, quad
    flush = lambda z: 0j if abs(z) < _TINY else z
    return t, [flush(complex(z) / t) for z in lin], [flush(complex(z) / t / t) for z in quad]


def _penta_norm(u, v):
    """``||x I + y E12||`` in terms of ``u = |x|`` and ``v = |y|``."""
    return 0.5 * (v + np.hypot(v, 2 * u))


class _DiagProblem:
    """Minimize ``max(|x1|, |x2|)`` subject to ``1 - a11 x1 - a22 x2 + d x1 x2 = 0``.

    ``x2 = M(x1) = (1 - a11 x1) / (a22 - d x1)``, a non-degenerate Mobius map
    whenever ``a12 a21 != 0``.
    """

    def __init__(self, a11, a22, d):
        self.p, self.q, self.r, self.s = -a11, 1.0 + 0j, -d, a22
        self.zero_moduli = [] if a11 == 0 else [abs(1 / a11)]
        self.a11, self.a22, self.d = a11, a22, d
        self.trace, self.det = a11 + a22, d

    def value(self, x):
        x = np.asarray(x, dtype=complex)
        with np.errstate(divide="ignore", invalid="ignore"):
            x2 = (self.p * x + self.q) / (self.r * x + self.s)
        val = np.maximum(np.abs(x), np.abs(x2))
        return np.where(np.isfinite(val), val, np.inf)

    def circle_min(self, rad):
        """Exact ``min |M(x)|`` over ``|x| = rad`` and a point attaining it."""
        p, q, r, s = self.p, self.q, self.r, self.s
        rad = np.asarray(rad, dtype=float)
        if r == 0:
            centre = np.full(rad.shape, q / s)
            radius = abs(p / s) * rad
            ok = np.ones(rad.shape, dtype=bool)
        else:
            k = (q * r - p * s) / (r * r)
            w = s / r
            denom = abs(w) ** 2 - rad**2
            ok = np.abs(denom) > 1e-14 * (abs(w) ** 2 + rad**2)
            safe = np.where(ok, denom, 1.0)
            centre = p / r + k * np.conj(w) / safe
            radius = np.abs(k) * rad / np.abs(safe)
        gmin = np.where(ok, np.abs(np.abs(centre) - radius), 0.0)
        # a degenerate circle is the single point 0, possibly the pole itself
        at_zero = rad == 0
        if np.any(at_zero):
            gmin = np.where(at_zero, abs(q / s) if s != 0 else np.inf, gmin)
            ok = ok | at_zero
        # nearest point of the image circle to the origin, pulled back through M
        mod = np.abs(centre)
        unit = np.where(mod > 0, centre / np.where(mod > 0, mod, 1.0), 1.0)
        y = centre - radius * unit
        with np.errstate(divide="ignore", invalid="ignore"):
            x = (s * y - q) / (p - r * y)
        x = np.where(ok & np.isfinite(x) & ~at_zero, x, rad)
        return gmin, x

    def interval_lower(self, r0, r1, g0, g1):
        glow = np.minimum(g0, g1)
        for m in self.zero_moduli:
            glow = np.where((r0 <= m) & (m <= r1), 0.0, glow)
        glow = np.maximum(0.0, glow - _SLACK * (1 + glow))
        return np.maximum(r0, glow)

    def seeds(self):
        out = []
        if self.a11 != 0:
            out.append(1 / self.a11)
        if self.a22 != 0:
            out.append(0j)
        for lam in quadratic_roots(self.a11 + self.a22, self.d):
            if lam != 0:
                out.append(1 / lam)
        return out


class _PentaProblem:
    """Minimize ``||x I + y E12||`` subject to ``1 - s x + p x^2 - a y = 0``.

    ``y = q(x) / a`` with ``q(x) = 1 - s x + p x^2``.
    """

    def __init__(self, a, s, p):
        self.a, self.s, self.p = a, s, p
        self.trace, self.det = s, p
        if p != 0:
            self.zero_moduli = [abs(z) for z in np.roots([p, -s, 1])]
        elif s != 0:
            self.zero_moduli = [abs(1 / s)]
        else:
            self.zero_moduli = []

    def q(self, x):
        return 1 - self.s * x + self.p * x * x

    def value(self, x):
        x = np.asarray(x, dtype=complex)
        return _penta_norm(np.abs(x), np.abs(self.q(x) / self.a))

    def circle_min(self, rad):
        """Exact ``min |q(x)|`` over ``|x| = rad`` and a point attaining it.

        ``|q(r w)|^2`` is a trigonometric polynomial of degree 2 in ``w = e^{i theta}``;
        its critical points are roots of a quartic in ``w``.
        """
        rad = np.asarray(rad, dtype=float)
        s, p = self.s, self.p
        if p == 0:
            # |1 - s x| is smallest where s x is real and positive
            phase = np.conj(s) / abs(s) if s != 0 else 1.0
            x = rad * phase
            return np.abs(self.q(x)), x
        b1 = -s * rad
        b2 = p * rad**2
        # coefficients c_k of w^k in |q|^2, k = -2..2, with c_{-k} = conj(c_k)
        c1 = b1 + b2 * np.conj(b1)
        c2 = b2
        # w^2 d/dtheta |q|^2 / i = -2 conj(c2) - conj(c1) w + c1 w^3 + 2 c2 w^4
        cands = np.empty(rad.shape + (5,), dtype=complex)
        cands[..., 4] = 1.0
        # when c2 is negligible next to c1 the quartic degenerates to
        # c1 w^3 - conj(c1) w, whose unit roots solve w^2 = conj(c1) / c1; using
        # them moves the critical value only at second order in |c2 / c1|
        small = np.abs(c2) <= 1e-7 * np.abs(c1)
        if np.any(small & (rad > 0)):
            c1s = c1[small & (rad > 0)]
            w = np.sqrt(np.conj(c1s) / c1s)
            cands[small & (rad > 0), :4] = np.stack([w, -w, w, -w], axis=-1)
        live = (rad > 0) & ~small
        if np.any(live):
            lead = 2 * c2[live]
            comp = np.zeros((int(live.sum()), 4, 4), dtype=complex)
            comp[:, 1:, :3] = np.eye(3)
            # monic quartic w^4 + e3 w^3 + e2 w^2 + e1 w + e0
            comp[:, 0, 3] = 2 * np.conj(c2[live]) / lead
            comp[:, 1, 3] = np.conj(c1[live]) / lead
            comp[:, 2, 3] = 0.0
            comp[:, 3, 3] = -c1[live] / lead
            roots = np.linalg.eigvals(comp)
            mod = np.abs(roots)
            roots = np.where(mod > 0, roots / np.where(mod > 0, mod, 1.0), 1.0)
            cands[live, :4] = roots
        cands[rad == 0, :4] = 1.0
        x = rad[..., None] * cands
        vals = np.abs(self.q(x))
        idx = np.argmin(vals, axis=-1)
        gmin = np.take_along_axis(vals, idx[..., None], axis=-1)[..., 0]
        xbest = np.take_along_axis(x, idx[..., None], axis=-1)[..., 0]
        return gmin, xbest

    def interval_lower(self, r0, r1, g0, g1):
        glow = np.minimum(g0, g1)
        for m in self.zero_moduli:
            glow = np.where((r0 <= m) & (m <= r1), 0.0, glow)
        glow = np.maximum(0.0, glow - _SLACK * (1 + glow))
        return _penta_norm(r0, glow / abs(self.a))

    def seeds(self):
        out = [0j]
        for lam in quadratic_roots(self.s, self.p):
            if lam != 0:
                out.append(1 / lam)
        return out


def _branch_and_bound(problem, structure, resolution, config):
    """Bisection on the radius ``|x|`` with exact circle minima and annulus bounds."""
    seeds = np.array(problem.seeds(), dtype=complex)
    vals = problem.value(seeds)
    best = float(vals.min())
    # X = I / lambda is feasible in both structures with norm exactly 1 / |lambda|;
    # taking it directly avoids evaluating the eliminated variable next to its zero
    for lam in quadratic_roots(problem.trace, problem.det):
        if lam != 0:
            best = min(best, 1 / abs(lam))

    # an optimal x satisfies |x| <= best
    edges = np.linspace(0.0, best, config.n_radii + 1)
    r0, r1 = edges[:-1], edges[1:]
    g_edges, x_edges = problem.circle_min(edges)
    g0, g1 = g_edges[:-1], g_edges[1:]
    best = min(best, float(problem.value(x_edges).min()))

    lower_m = 0.0
    converged = False
    for _ in range(config.max_levels):
        low = problem.interval_lower(r0, r1, g0, g1)
        keep = low < best
        lower_m = min(best, float(low[keep].min())) if keep.any() else best
        if _mu_width(lower_m, best) < resolution:
            converged = True
            break
        r0, r1, g0, g1 = r0[keep], r1[keep], g0[keep], g1[keep]
        if 2 * len(r0) > config.max_cells:
            break
        mid = 0.5 * (r0 + r1)
        gm, xm = problem.circle_min(mid)
        best = min(best, float(problem.value(xm).min()))
        r0, r1 = np.concatenate([r0, mid]), np.concatenate([mid, r1])
        g0, g1 = np.concatenate([g0, gm]), np.concatenate([gm, g1])

    upper = math.inf if lower_m <= 0 else 1 / lower_m
    return MuBracket(1 / best, upper, structure, converged)


def _mu_width(lower_m, best_m):
    if lower_m <= 0:
        return math.inf
    return 1 / lower_m - 1 / best_m


def mu_diag(a11, a22, d, resolution=1e-4, config: MuConfig = MuConfig()) -> MuBracket:
    """``mu`` for diagonal perturbations; depends on ``A`` only through ``(a11, a22, det A)``."""
    t, (a11, a22), (d,) = _normalize([a11, a22], [d])
    if t == 0:
        return MuBracket(0, 0, Structure.DIAG)
    if d - a11 * a22 == 0:
        # a12 a21 = 0: det(I - AX) = (1 - a11 x1)(1 - a22 x2)
        v = t * max(abs(a11), abs(a22))
        return MuBracket(v, v, Structure.DIAG)
    # the width target is absolute, so it shrinks with the scale
    b = _branch_and_bound(_DiagProblem(a11, a22, d), Structure.DIAG, resolution / t, config)
    return MuBracket(t * b.lower, t * b.upper, b.structure, b.converged)


def mu_penta(a, s, p, resolution=1e-4, config: MuConfig = MuConfig()) -> MuBracket:
    """``mu`` over ``span{I, E12}``; depends on ``A`` only through ``(a21, tr A, det A)``."""
    t, (a, s), (p,) = _normalize([a, s], [p])
    if t == 0:
        return MuBracket(0, 0, Structure.PENTA)
    if a == 0:
        # y drops out, so the scalar structure decides
        v = t * max(abs(z) for z in quadratic_roots(s, p))
        return MuBracket(v, v, Structure.PENTA)
    b = _branch_and_bound(_PentaProblem(a, s, p), Structure.PENTA, resolution / t, config)
    return MuBracket(t * b.lower, t * b.upper, b.structure, b.converged)


# -- membership oracles -----------------------------------------------------


def tetra_realization(x: TetraPoint) -> Mat2:
    """Matrix with diagonal ``(x1, x2)`` and determinant ``x3``, off-diagonal split evenly."""
    off = cmath.sqrt(x.x1 * x.x2 - x.x3)
    return Mat2(x.x1, off, off, x.x2)


def penta_realization(q: PentaPoint) -> Mat2:
    """Matrix with ``a21 = a``, trace ``s`` and determinant ``p``."""
    if abs(q.a) > 1e-9:
        half = q.s / 2
        return Mat2(half, (half * half - q.p) / q.a, q.a, half)
    l1, l2 = quadratic_roots(q.s, q.p)
    return Mat2(l1, 0, q.a, l2)


def _membership(bracket: MuBracket, tol: float) -> Membership:
    if bracket.upper < 1 - tol:
        return Membership.INSIDE
    if bracket.lower > 1 + tol:
        return Membership.OUTSIDE
    return Membership.BOUNDARY_BAND


def in_tetra(x: TetraPoint, tol: float = 1e-9, resolution: float = 1e-4) -> Membership:
    return _membership(mu(tetra_realization(x), Structure.DIAG, resolution), tol)


def in_penta(q: PentaPoint, tol: float = 1e-9, resolution: float = 1e-4) -> Membership:
    return _membership(mu(penta_realization(q), Structure.PENTA, resolution), tol)


__all__ = [
    "Membership",
    "MuBracket",
    "MuConfig",
    "Structure",
    "in_penta",
    "in_tetra",
    "mu",
    "mu_diag",
    "mu_penta",
    "penta_realization",
    "tetra_realization",
]
