"""Finite Blaschke products and boundary interpolation at roots of unity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complex_core import UNIMODULAR_TOL, DiscAutomorphism
from .errors import DomainError, InterpolationFailure


@dataclass(frozen=True)
class BlaschkeProduct:
    """``B(z) = unimodular * prod_k B_{a_k}(z)``, factors in the ``(z-a)/(conj(a) z - 1)`` form."""

    unimodular: complex
    zeros: tuple[complex, ...] = ()

    def __post_init__(self):
        u = complex(self.unimodular)
        zeros = tuple(complex(a) for a in self.zeros)
        if abs(abs(u) - 1) > UNIMODULAR_TOL:
            raise DomainError(f"unimodular constant has modulus {abs(u)!r}")
        for a in zeros:
            if not abs(a) < 1:
                raise DomainError(f"zero {a!r} is not in the open disc")
        object.__setattr__(self, "unimodular", u)
        object.__setattr__(self, "zeros", zeros)

    @classmethod
    def identity(cls) -> BlaschkeProduct:
        return cls(-1 + 0j, (0j,))

    @classmethod
    def from_automorphism(cls, v: DiscAutomorphism) -> BlaschkeProduct:
        return cls(v.eta, (v.alpha,))

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __call__(self, z):
        return evaluate(self, z)


def evaluate(B: BlaschkeProduct, z):
    """Evaluate ``B`` at a scalar or array of points in the closed disc."""
    scalar = np.isscalar(z)
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) > 1 + 1e-9):
        raise DomainError("Blaschke products are evaluated on the closed disc only")
    out = _product(B.unimodular, np.asarray(B.zeros, dtype=complex), z)
    return complex(out) if scalar else out


def _product(u, zeros, z):
    out = np.full(np.shape(z), u, dtype=complex)
    for a in zeros:
        out = out * (z - a) / (np.conj(a) * z - 1)
    return out


def roots_of_unity(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be positive")
    return np.exp(2j * np.pi * np.arange(n) / n)


@dataclass(frozen=True)
class InterpConfig:
    tol: float = 1e-8
    restarts: int = 8
    seed: int = 0
    init_radius: float = 0.5
    max_iter: int = 200
    screening_iter: int = 30


def interpolation_residual(B: BlaschkeProduct, targets) -> float:
    targets = np.asarray(targets, dtype=complex)
    nodes = roots_of_unity(len(targets))
    return float(np.max(np.abs(evaluate(B, nodes) - targets)))


def minimal_degree(targets) -> int:
    """Lower bound on the degree of any Blaschke product with ``B(mu_j) = targets[j]``.

    On the circle the argument of a degree ``d >= 1`` product increases strictly,
    by ``2 pi d`` in total, so each gap between consecutive targets costs its
    principal increment in ``(0, 2 pi]`` at least.
    """
    targets = np.asarray(targets, dtype=complex)
    steps = np.angle(np.roll(targets, -1) / targets) % (2 * np.pi)
    steps[steps < 1e-12] = 2 * np.pi
    return int(round(steps.sum() / (2 * np.pi)))


def _fit(phase, zeros, nodes, targets, max_iter, tol):
    """Levenberg-Marquardt on ``B(nodes) = targets`` over the phase and the zeros.

    Steps are minimum-norm (the system is usually underdetermined) and are
    rejected whenever a zero would leave the disc.
    """
    zeros = np.array(zeros, dtype=complex)
    d = len(zeros)
    lam = 1e-3

    def state(phase, zeros):
        val = _product(np.exp(1j * phase), zeros, nodes)
        return val, val - targets

    val, r = state(phase, zeros)
    err = np.max(np.abs(r))
    z = nodes[:, None]
    checkpoint = err
    for it in range(1, max_iter + 1):
        if err < tol * 1e-4:
            break
        if it % 20 == 0:
            # converging runs gain orders of magnitude per 20 steps
            if err > 0.5 * checkpoint:
                break
            checkpoint = err
        # d log B / d(param); a zero a = x + i y enters through a and conj(a)
        pole = np.conj(zeros)[None, :] * z - 1
        dx = -1 / (z - zeros[None, :]) - z / pole
        dy = -1j / (z - zeros[None, :]) + 1j * z / pole
        jc = np.empty((len(nodes), 1 + 2 * d), dtype=complex)
        jc[:, 0] = 1j
        jc[:, 1::2] = dx
        jc[:, 2::2] = dy
        jc *= val[:, None]
        jr = np.vstack([jc.real, jc.imag])
        rr = np.concatenate([r.real, r.imag])
        gram = jr @ jr.T
        improved = False
        for _ in range(25):
            step = -jr.T @ np.linalg.solve(gram + lam * np.eye(len(rr)), rr)
            new = zeros + step[1::2] + 1j * step[2::2]
            if np.all(np.abs(new) < 1 - 1e-12):
                nval, nr = state(phase + step[0], new)
                nerr = np.max(np.abs(nr))
                if nerr < err:
                    phase, zeros, val, r, err = phase + step[0], new, nval, nr, nerr
                    lam = max(lam / 10, 1e-14)
                    improved = True
                    break
            lam *= 10
        if not improved:
            break
    return phase, zeros, err


def interpolate_roots_of_unity(targets, config: InterpConfig = InterpConfig()) -> BlaschkeProduct:
    """Blaschke product of degree at most ``n`` with ``B(mu_j) = targets[j]``.

    ``mu_j = exp(2 pi i j / n)``. Degrees are tried in increasing order starting
    from :func:`minimal_degree`; each degree runs a multi-start damped
    Gauss-Newton fit of the phase and the zeros. Residuals are chordal
    distances on the circle, which are free of branch cuts.
    """
    targets = np.asarray(targets, dtype=complex).ravel()
    n = len(targets)
    if n < 1:
        raise ValueError("need at least one target")
    if np.any(np.abs(np.abs(targets) - 1) > 1e-9):
        raise DomainError("interpolation targets must be unimodular")
    targets = targets / np.abs(targets)
    nodes = roots_of_unity(n)

    const = BlaschkeProduct(targets[0])
    best_res, best = interpolation_residual(const, targets), const
    if best_res < config.tol:
        return const

    rng = np.random.default_rng(config.seed)
    # with 2d + 1 <= n real parameters the fit is square or overdetermined and
    # generically has no solution, so those degrees only get a cheap screening
    full_effort_from = (n + 1) // 2
    for d in range(max(1, minimal_degree(targets)), n + 1):
        screening = d < full_effort_from
        restarts = 2 if screening else config.restarts
        for k in range(restarts):
            angles = 2 * np.pi * (np.arange(d) + k / restarts) / d
            zeros = config.init_radius * np.exp(1j * angles)
            if k:
                zeros = zeros + 0.1 * (rng.standard_normal(d) + 1j * rng.standard_normal(d))
                zeros = np.where(np.abs(zeros) < 0.95, zeros, 0.9 * zeros / np.abs(zeros))
            # rotate so the first node is already matched
            phase = np.angle(targets[0] / _product(1.0, zeros, nodes[:1])[0])
            phase, zs, _ = _fit(
                phase, zeros, nodes, targets,
                config.screening_iter if screening else config.max_iter, config.tol,
            )
            cand = BlaschkeProduct(np.exp(1j * phase), tuple(zs))
            res = interpolation_residual(cand, targets)
            if res < best_res:
                best_res, best = res, cand
            if res < config.tol:
                return cand
    raise InterpolationFailure(
        f"no Blaschke product of degree <= {n} met tolerance {config.tol:g} "
        f"(best residual {best_res:.3g}, degree {best.degree})",
        best_residual=best_res,
    )
