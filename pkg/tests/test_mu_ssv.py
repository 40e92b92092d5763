import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import d_scaling_mu, disc_points, tetra_closed_form_inside
from mudomains.matrix2 import Mat2, op_norm, spectral_radius
from mudomains.mu_ssv import (
    Membership,
    MuBracket,
    Structure,
    in_penta,
    in_tetra,
    mu,
    mu_penta,
    penta_realization,
    tetra_realization,
)
from mudomains.points import PentaPoint, TetraPoint

RES = 1e-4


def random_matrix(rng, scale=1.0):
    return Mat2.from_array(scale * (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))))


def penta_grid_mu(A, n=200, zooms=6):
    """Brute force over x on a grid, zoomed around the best cell; y solves the constraint."""
    a, s, p = A.a21, A.trace, A.det

    def norms(x):
        y = (1 - s * x + p * x * x) / a
        # ||[[x, y], [0, x]]|| = sqrt(|x|^2 + |y|^2 / 4) + |y| / 2
        return np.sqrt(np.abs(x) ** 2 + np.abs(y) ** 2 / 4) + np.abs(y) / 2

    centre, half = 0j, 4.0
    best = np.inf
    for _ in range(zooms):
        g = np.linspace(-half, half, n)
        x = centre + g[:, None] + 1j * g[None, :]
        vals = norms(x)
        k = np.unravel_index(np.argmin(vals), vals.shape)
        best = min(best, vals[k])
        centre, half = x[k], 4 * half / n
    return 1 / best


def test_penta_norm_formula_matches_numpy():
    x, y = 0.3 - 0.2j, 1.1 + 0.4j
    m = np.array([[x, y], [0, x]])
    assert abs(np.linalg.norm(m, 2) - (np.sqrt(abs(x) ** 2 + abs(y) ** 2 / 4) + abs(y) / 2)) < 1e-14


# -- examples ------------------------------------------------------------------


def test_zero_matrix():
    for structure in Structure:
        b = mu(Mat2(0, 0, 0, 0), structure)
        assert b.lower == b.upper == 0


def test_identity():
    for structure in Structure:
        b = mu(Mat2(1, 0, 0, 1), structure)
        assert abs(b.lower - 1) < RES and abs(b.upper - 1) < RES


def test_nilpotent():
    A = Mat2(0, 1, 0, 0)
    assert mu(A, "full").upper == pytest.approx(1)
    assert mu(A, "scalar").upper == 0
    assert mu(A, "diag").upper == 0


def test_diag_of_diagonal_matrix():
    b = mu(Mat2.diag(0.3, -0.7j), "diag")
    assert abs(b.lower - 0.7) < 1e-12 and abs(b.upper - 0.7) < 1e-12


def test_penta_with_zero_corner_is_spectral_radius():
    A = Mat2(0.4, 2.0, 0, -0.6j)
    b = mu(A, "penta")
    assert b.lower == pytest.approx(0.6) and b.upper == pytest.approx(0.6)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        mu(Mat2(1, 0, 0, 1), "blocks")
    with pytest.raises(ValueError):
        mu(Mat2(1, 0, 0, 1), "diag", resolution=0)


def test_bracket_coerces_fields():
    b = MuBracket(1, 2, "diag", 1)
    assert isinstance(b.lower, float) and b.structure is Structure.DIAG and b.converged is True
    assert b.width == 1 and b.mid == 1.5


# -- oracles -------------------------------------------------------------------


def test_diag_matches_d_scaling(rng):
    for _ in range(200):
        A = random_matrix(rng)
        b = mu(A, "diag", RES)
        ref = d_scaling_mu(A)
        assert b.lower <= b.upper
        assert b.lower - 1e-9 <= ref <= b.upper * (1 + 1e-6) + 1e-9 or abs(ref - b.mid) < RES * max(1, ref)


def test_penta_matches_grid(rng):
    for _ in range(40):
        A = random_matrix(rng, 0.5)
        b = mu(A, "penta", RES)
        # a grid point is feasible, so it can only underestimate mu
        assert penta_grid_mu(A) <= b.upper * (1 + 1e-9)
        assert abs(penta_grid_mu(A) - b.mid) < 1e-3 * b.mid


def test_structure_ordering(rng):
    for _ in range(100):
        A = random_matrix(rng)
        r, n = spectral_radius(A), op_norm(A)
        for structure in ("diag", "penta"):
            b = mu(A, structure, RES)
            assert r * (1 - 1e-9) - 1e-12 <= b.upper
            assert b.lower <= n * (1 + 1e-9) + 1e-12
        assert mu(A, "diag").upper >= max(abs(A.a11), abs(A.a22)) - 1e-12


def test_tetra_membership_matches_closed_form(rng):
    checked = 0
    while checked < 150:
        x = TetraPoint(*(1.2 * (rng.random(3) * np.exp(2j * np.pi * rng.random(3)))))
        slack = tetra_closed_form_inside(x.coords)
        if abs(slack) < 1e-3:
            continue
        got = in_tetra(x)
        assert got is (Membership.INSIDE if slack > 0 else Membership.OUTSIDE)
        checked += 1


def test_realizations():
    x = TetraPoint(0.2, -0.3j, 0.1)
    A = tetra_realization(x)
    assert (A.a11, A.a22) == (0.2, -0.3j) and abs(A.det - 0.1) < 1e-15
    for q in (PentaPoint(0.5, 0.2, 0.1j), PentaPoint(0, 0.2, 0.1j)):
        A = penta_realization(q)
        assert abs(A.a21 - q.a) < 1e-15 and abs(A.trace - q.s) < 1e-15 and abs(A.det - q.p) < 1e-15


def test_penta_membership_examples():
    assert in_penta(PentaPoint(0, 0, 0)) is Membership.INSIDE
    assert in_penta(PentaPoint(0.5, 0, 0)) is Membership.INSIDE
    assert in_penta(PentaPoint(2, 0, 0)) is Membership.OUTSIDE
    assert in_penta(PentaPoint(0, 3, 1)) is Membership.OUTSIDE
    assert in_penta(PentaPoint(1, 0, 1)) is Membership.BOUNDARY_BAND


def test_tetra_membership_examples():
    assert in_tetra(TetraPoint(0, 0, 0)) is Membership.INSIDE
    assert in_tetra(TetraPoint(0, 0, 1)) is Membership.BOUNDARY_BAND
    assert in_tetra(TetraPoint(2, 0, 0)) is Membership.OUTSIDE


# -- properties ----------------------------------------------------------------


@given(st.lists(disc_points(2.0), min_size=4, max_size=4), st.floats(0.01, 100), st.sampled_from(["diag", "penta"]))
def test_scale_covariance(entries, t, structure):
    A = Mat2(*entries)
    b, bt = mu(A, structure, RES), mu(A.scale(t), structure, RES)
    assert bt.lower <= t * b.upper * (1 + 2e-4) + 1e-12
    assert t * b.lower <= bt.upper * (1 + 2e-4) + 1e-12


@given(st.lists(disc_points(2.0), min_size=4, max_size=4), st.sampled_from(list(Structure)))
def test_bracket_is_ordered_and_converged(entries, structure):
    b = mu(Mat2(*entries), structure, RES)
    assert 0 <= b.lower <= b.upper
    assert b.converged
    if b.upper > 0:
        assert b.width <= RES * (1 + 1e-9)


@given(st.lists(disc_points(2.0), min_size=4, max_size=4))
def test_deterministic(entries):
    A = Mat2(*entries)
    assert mu(A, "penta") == mu(A, "penta")


def test_subnormal_inputs_do_not_break_solver():
    b = mu_penta(0.5, 1e-310, 1e-311)
    assert b.upper == pytest.approx(0.5, rel=1e-3) or b.lower <= 0.5 <= b.upper + RES
