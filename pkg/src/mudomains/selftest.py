"""Executable property checks, one per acceptance criterion.

Each check draws its own samples from a seeded generator and returns a
:class:`CheckResult` holding the measured worst case next to the pass flag, so
a failure reports how far off it was. :class:`Scale` sets the sample counts;
the defaults are the full acceptance sizes and ``Scale.from_samples`` gives the
smaller runs used by ``mudomains selftest``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .automorphisms import (
    PentaAutParams,
    TetraAutParams,
    penta_apply,
    penta_compose,
    penta_inverse,
    tau_apply,
    tau_blaschke_apply,
    tetra_apply,
    tetra_compose,
    tetra_cyclic_shift,
    tetra_flip,
    tetra_inverse,
)
from .blaschke import BlaschkeProduct, interpolate_roots_of_unity, interpolation_residual, roots_of_unity
from .complex_core import DiscAutomorphism, aut_compose, aut_inverse
from .domains import (
    PentaStratum,
    TetraStratum,
    classify_b_penta,
    classify_b_tetra,
    classify_gamma_n,
    royal_gamma2,
    sample_points,
    symmetrize,
)
from .errors import MuDomainsError
from .matrix2 import Mat2, op_norm, project_penta, project_tetra, spectral_radius
from .mu_ssv import Membership, in_penta, in_tetra, mu
from .orbits import a_tilde, decompose_b_gamma2, decompose_b_penta, decompose_b_tetra
from .points import Gamma2Point, PentaPoint, TetraPoint, coord_distance

RESIDUAL_TOL = 1e-8
GROUP_TOL = 1e-9

# fixed points of each domain on which maps are compared
GAMMA2_PROBES = tuple(
    symmetrize(z)
    for z in ((0, 0.5), (-0.5, 0.5j), (-0.5j, 0.3 + 0.4j), (0.5, 0.5), (0.3 + 0.4j, -0.5), (1j, -1))
)
GAMMA2_PROBES = tuple(Gamma2Point(*c.coeffs) for c in GAMMA2_PROBES)
TETRA_PROBES = (
    TetraPoint(0, 0, 0),
    TetraPoint(0.5, 0, 0),
    TetraPoint(0, 0.5j, 0),
    TetraPoint(0.2, 0.3, 0.06),
    TetraPoint(0.3 + 0.4j, -0.2, 0.1j),
    TetraPoint(0, 0, 1),
)
PENTA_PROBES = (
    PentaPoint(0, 0, 0),
    PentaPoint(0.5, 0, 0),
    PentaPoint(0, 0.5, 0),
    project_penta(Mat2(0.1, 0.2, 0.3, 0.4)),
    project_penta(Mat2(0.3j, -0.2, 0.1 + 0.2j, -0.4)),
    PentaPoint(1, 0, 1),
)

FLIP_POINT = TetraPoint(-0.495j, 0.5j, 0.99)


@dataclass(frozen=True)
class Scale:
    boundary_samples: int = 10_000
    param_draws: int = 1_000
    blaschke_draws: int = 1_000
    interp_vectors: int = 200
    mu_matrices: int = 1_000

    @classmethod
    def from_samples(cls, samples: int) -> Scale:
        light = max(1, samples // 5)
        return cls(samples, samples, samples, light, light)


@dataclass
class CheckResult:
    name: str
    passed: bool
    metrics: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        shown = ", ".join(f"{k}={_fmt(v)}" for k, v in self.metrics.items())
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {shown}"


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.3g}"
    return str(v)


# -- random draws ------------------------------------------------------------


def _unit(rng):
    return complex(np.exp(2j * np.pi * rng.random()))


def _disc(rng, radius=0.95):
    return radius * np.sqrt(rng.random()) * _unit(rng)


def random_disc_aut(rng) -> DiscAutomorphism:
    return DiscAutomorphism(_unit(rng), _disc(rng))


def random_tetra_params(rng, flip=None) -> TetraAutParams:
    if flip is None:
        flip = rng.random() < 0.5
    return TetraAutParams(_unit(rng), _disc(rng), _unit(rng), _disc(rng), flip)


def random_penta_params(rng) -> PentaAutParams:
    return PentaAutParams(_unit(rng), random_disc_aut(rng))


def random_blaschke(rng, max_degree=4) -> BlaschkeProduct:
    d = int(rng.integers(1, max_degree + 1))
    return BlaschkeProduct(_unit(rng), tuple(_disc(rng, 0.9) for _ in range(d)))


def random_matrix(rng, max_norm=0.95) -> Mat2:
    m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    m *= max_norm * rng.random() / np.linalg.norm(m, 2)
    return Mat2.from_array(m)


# -- closed-form images of the canonical tetrablock points --------------------


def nontriangular_image(t: TetraAutParams) -> TetraPoint:
    """Closed form for ``T_{v,chi}(0, 0, 1)`` as it appears in the literature.

    The third component is written ``xi1 conj(xi2) (1 + z1 z2 conj(xi2)) / den``.
    Substituting into the general formula gives ``xi1 xi2 (...) / den``
    instead; the two agree when ``xi2 = +-1``, which covers every parameter
    set produced by the decomposition.
    """
    xi1, z1, xi2, z2 = t.xi1, t.z1, t.xi2, t.z2
    den = 1 + xi2 * z1.conjugate() * z2.conjugate()
    return TetraPoint(
        -xi1 * (z1 + xi2 * z2.conjugate()) / den,
        -(z1.conjugate() * xi2 + z2) / den,
        xi1 * xi2.conjugate() * (1 + z1 * z2 * xi2.conjugate()) / den,
    )


def triangular_image(t: TetraAutParams) -> TetraPoint:
    """Closed form for ``T_{v,chi}(1, 1, 1)``."""
    xi1, z1, xi2, z2 = t.xi1, t.z1, t.xi2, t.z2
    first = xi1 * (1 - z1) / (1 - z1.conjugate())
    second = (xi2 - z2) / (1 - xi2 * z2.conjugate())
    return TetraPoint(first, second, first * second)


# -- criteria ------------------------------------------------------------------


def check_gamma2_orbits(scale: Scale, seed: int = 0) -> CheckResult:
    pts = sample_points("bGamma2", scale.boundary_samples, seed=seed)
    worst, mismatches, failures = 0.0, 0, 0
    for x in pts:
        try:
            d = decompose_b_gamma2(x)
        except MuDomainsError:
            failures += 1
            continue
        worst = max(worst, d.residual)
        royal = abs(x.s * x.s - 4 * x.p) <= 1e-9
        mismatches += (d.stratum == "RoyalGamma2") != royal
    ok = failures == 0 and mismatches == 0 and worst < RESIDUAL_TOL
    return CheckResult(
        "gamma2 orbit completeness", ok,
        {"points": len(pts), "max_residual": worst, "label_mismatches": mismatches, "failures": failures},
    )


def check_tetra_orbits(scale: Scale, seed: int = 0) -> CheckResult:
    pts = sample_points("bTetra", scale.boundary_samples, seed=seed)
    worst, worst_closed, failures = 0.0, 0.0, 0
    for x in pts:
        try:
            d = decompose_b_tetra(x)
        except MuDomainsError:
            failures += 1
            continue
        worst = max(worst, d.residual)
        closed = triangular_image(d.params) if d.stratum == "TriangularE" else nontriangular_image(d.params)
        worst_closed = max(worst_closed, coord_distance(closed, x))
    ok = failures == 0 and worst < RESIDUAL_TOL and worst_closed < 1e-10
    return CheckResult(
        "tetrablock orbit completeness", ok,
        {"points": len(pts), "max_residual": worst, "max_closed_form_error": worst_closed, "failures": failures},
    )


def check_penta_orbits(scale: Scale, seed: int = 0) -> CheckResult:
    pts = sample_points("bPenta", scale.boundary_samples, seed=seed)
    worst, worst_a, worst_tilde, failures = 0.0, 0.0, 0.0, 0
    for q in pts:
        try:
            d = decompose_b_penta(q)
        except MuDomainsError:
            failures += 1
            continue
        worst = max(worst, d.residual)
        if d.stratum == "RoyalP":
            worst_a = max(worst_a, abs(q.a))
        else:
            worst_tilde = max(worst_tilde, abs(abs(a_tilde(d.params.v)) - abs(q.a)))
    ok = failures == 0 and worst < RESIDUAL_TOL and worst_a < 1e-9 and worst_tilde < 1e-9
    return CheckResult(
        "pentablock orbit completeness", ok,
        {
            "points": len(pts), "max_residual": worst, "max_royal_abs_a": worst_a,
            "max_a_tilde_gap": worst_tilde, "failures": failures,
        },
    )


def check_invariance(scale: Scale, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    n = scale.boundary_samples
    flips = 0
    worst_g = worst_t = worst_p = 0.0

    for x in sample_points("bGamma2", n, seed=seed + 1):
        y = tau_apply(random_disc_aut(rng), x)
        c = classify_gamma_n(y)
        worst_g = max(worst_g, c.defect)
        flips += (not c.on_boundary) or royal_gamma2(y) != royal_gamma2(x)

    for x in sample_points("bTetra", n, seed=seed + 2):
        y = tetra_apply(random_tetra_params(rng), x)
        cx, cy = classify_b_tetra(x), classify_b_tetra(y)
        worst_t = max(worst_t, cy.defect)
        flips += cx.stratum != cy.stratum

    for q in sample_points("bPenta", n, seed=seed + 3):
        r = penta_apply(random_penta_params(rng), q)
        cq, cr = classify_b_penta(q), classify_b_penta(r)
        worst_p = max(worst_p, cr.defect)
        flips += cq.stratum != cr.stratum

    worst_third, worst_first = 0.0, 0.0
    for _ in range(scale.param_draws):
        y = tetra_apply(random_tetra_params(rng, flip=False), TetraPoint(0, 0, 1), check=False)
        worst_third = max(worst_third, abs(abs(y.x3) - 1))
        worst_first = max(worst_first, abs(y.x1))

    defect = max(worst_g, worst_t, worst_p)
    ok = flips == 0 and defect < RESIDUAL_TOL and worst_third < 1e-10 and worst_first < 1
    return CheckResult(
        "automorphism invariance", ok,
        {
            "points_per_domain": n, "label_changes": flips, "max_gamma2_defect": worst_g,
            "max_tetra_defect": worst_t, "max_penta_defect": worst_p,
            "max_third_coord_defect": worst_third, "max_first_coord_modulus": worst_first,
        },
    )


def check_blaschke(scale: Scale, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst_fwd, off = 0.0, 0
    for n in (2, 3, 4):
        base = symmetrize(roots_of_unity(n))
        for _ in range(scale.blaschke_draws):
            c = classify_gamma_n(tau_blaschke_apply(random_blaschke(rng), base))
            worst_fwd = max(worst_fwd, c.defect)
            off += not c.on_boundary
    worst_inv, failures = 0.0, 0
    for n in (2, 3, 4, 5):
        for _ in range(scale.interp_vectors):
            targets = np.exp(2j * np.pi * rng.random(n))
            try:
                B = interpolate_roots_of_unity(targets)
            except MuDomainsError:
                failures += 1
                continue
            worst_inv = max(worst_inv, interpolation_residual(B, targets))
    ok = off == 0 and worst_fwd < RESIDUAL_TOL and failures == 0 and worst_inv < RESIDUAL_TOL
    return CheckResult(
        "Blaschke images and interpolation", ok,
        {
            "forward_max_defect": worst_fwd, "forward_off_boundary": off,
            "interp_max_residual": worst_inv, "interp_failures": failures,
        },
    )


def check_mu_oracle(scale: Scale, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    res = 1e-4
    outside, violations, unconverged = 0, 0, 0
    worst_gap = -np.inf
    for _ in range(scale.mu_matrices):
        A = random_matrix(rng)
        outside += in_tetra(project_tetra(A), resolution=res) is Membership.OUTSIDE
        outside += in_penta(project_penta(A), resolution=res) is Membership.OUTSIDE
        r, nrm = spectral_radius(A), op_norm(A)
        for structure in ("diag", "penta"):
            b = mu(A, structure, res)
            unconverged += not b.converged
            gap = max(r - res - b.lower, b.upper - nrm - res)
            worst_gap = max(worst_gap, gap)
            violations += gap > 0
    ok = outside == 0 and violations == 0
    return CheckResult(
        "mu oracle consistency", ok,
        {
            "matrices": scale.mu_matrices, "outside_verdicts": outside,
            "bracket_violations": violations, "max_bracket_overshoot": float(worst_gap),
            "unconverged": unconverged,
        },
    )


def check_flip_counterexample(scale: Scale = Scale(), seed: int = 0) -> CheckResult:
    x = FLIP_POINT
    here = in_tetra(x)
    shifted = in_tetra(tetra_cyclic_shift(x))
    swapped = in_tetra(tetra_flip(x))
    ok = here is Membership.INSIDE and shifted is Membership.OUTSIDE and swapped is Membership.INSIDE
    return CheckResult(
        "flip counterexample", ok,
        {"point": here.value, "cyclic_shift": shifted.value, "transposition": swapped.value},
    )


def check_group_laws(scale: Scale, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    err_g = err_t = err_p = 0.0
    for _ in range(scale.param_draws):
        v, w = random_disc_aut(rng), random_disc_aut(rng)
        vw, vi = aut_compose(v, w), aut_inverse(v)
        for x in GAMMA2_PROBES:
            err_g = max(
                err_g,
                coord_distance(tau_apply(vw, x, False), tau_apply(v, tau_apply(w, x, False), False)),
                coord_distance(tau_apply(vi, tau_apply(v, x, False), False), x),
            )
        a, b = random_tetra_params(rng), random_tetra_params(rng)
        ab, ai = tetra_compose(a, b), tetra_inverse(a)
        for x in TETRA_PROBES:
            err_t = max(
                err_t,
                coord_distance(tetra_apply(ab, x, False), tetra_apply(a, tetra_apply(b, x, False), False)),
                coord_distance(tetra_apply(ai, tetra_apply(a, x, False), False), x),
            )
        f, g = random_penta_params(rng), random_penta_params(rng)
        fg, fi = penta_compose(f, g), penta_inverse(f)
        for q in PENTA_PROBES:
            err_p = max(
                err_p,
                coord_distance(penta_apply(fg, q, False), penta_apply(f, penta_apply(g, q, False), False)),
                coord_distance(penta_apply(fi, penta_apply(f, q, False), False), q),
            )
    ok = max(err_g, err_t, err_p) < GROUP_TOL
    return CheckResult(
        "group laws", ok,
        {"draws": scale.param_draws, "gamma2_error": err_g, "tetra_error": err_t, "penta_error": err_p},
    )


CHECKS = (
    check_gamma2_orbits,
    check_tetra_orbits,
    check_penta_orbits,
    check_invariance,
    check_blaschke,
    check_mu_oracle,
    check_flip_counterexample,
    check_group_laws,
)


def run_all(scale: Scale = Scale(), seed: int = 0) -> list[CheckResult]:
    results = []
    for check in CHECKS:
        start = time.perf_counter()
        result = check(scale, seed)
        result.seconds = time.perf_counter() - start
        results.append(result)
    return results
