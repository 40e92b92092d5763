import cmath

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import disc_points, unit_points
from mudomains.blaschke import (
    BlaschkeProduct,
    InterpConfig,
    evaluate,
    interpolate_roots_of_unity,
    interpolation_residual,
    minimal_degree,
    roots_of_unity,
)
from mudomains.complex_core import DiscAutomorphism
from mudomains.errors import DomainError, InterpolationFailure

blaschke_products = st.builds(
    BlaschkeProduct, unit_points(), st.lists(disc_points(0.95), max_size=5).map(tuple)
)


def test_constant_product():
    c = cmath.exp(0.4j)
    B = BlaschkeProduct(c)
    assert B.degree == 0
    assert np.allclose(B(np.array([0, 0.5j, -1])), c)


def test_identity_product():
    assert BlaschkeProduct.identity()(1j) == pytest.approx(1j)


def test_from_automorphism():
    v = DiscAutomorphism(1j, 0.3)
    assert BlaschkeProduct.from_automorphism(v)(0.2 - 0.1j) == pytest.approx(v(0.2 - 0.1j))


def test_evaluate_outside_disc():
    with pytest.raises(DomainError):
        evaluate(BlaschkeProduct.identity(), 1.5)


def test_invalid_products():
    with pytest.raises(DomainError):
        BlaschkeProduct(2)
    with pytest.raises(DomainError):
        BlaschkeProduct(1, (1.0,))


def test_roots_of_unity():
    assert np.allclose(roots_of_unity(1), [1])
    assert np.allclose(roots_of_unity(2), [1, -1])
    assert np.allclose(roots_of_unity(4), [1, 1j, -1, -1j])


@given(blaschke_products, st.floats(0, 2 * np.pi))
def test_boundary_modulus(B, theta):
    assert abs(abs(B(cmath.exp(1j * theta))) - 1) < 1e-10


@given(blaschke_products)
def test_minimal_degree_is_a_lower_bound(B):
    for n in (1, 3, 6):
        assert minimal_degree(B(roots_of_unity(n))) <= max(B.degree, 1) or B.degree == 0


def test_interpolation_examples():
    B = interpolate_roots_of_unity([cmath.exp(0.3j)])
    assert B.degree == 0
    B = interpolate_roots_of_unity([1, -1])
    assert interpolation_residual(B, [1, -1]) < 1e-8
    targets = [1, cmath.exp(1j * np.pi / 3), cmath.exp(-1j * np.pi / 3)]
    B = interpolate_roots_of_unity(targets)
    assert max(abs(B(roots_of_unity(3)) - targets)) < 1e-8


def test_interpolation_respects_degree_bound(rng):
    for n in (2, 3, 4):
        for _ in range(30):
            targets = np.exp(2j * np.pi * rng.random(n))
            B = interpolate_roots_of_unity(targets)
            assert B.degree <= n
            assert all(abs(a) < 1 for a in B.zeros)
            assert interpolation_residual(B, targets) < 1e-8


def test_interpolation_is_deterministic(rng):
    targets = np.exp(2j * np.pi * rng.random(4))
    assert interpolate_roots_of_unity(targets) == interpolate_roots_of_unity(targets)


def test_non_unimodular_targets():
    with pytest.raises(DomainError):
        interpolate_roots_of_unity([1, 0.5])


def test_failure_reports_best_residual():
    # a budget too small to converge must surface as a failure, not a silent result
    config = InterpConfig(restarts=1, max_iter=1, screening_iter=1)
    targets = np.exp(1j * np.array([0.1, 2.9, 1.3, 5.0, 4.1]))
    with pytest.raises(InterpolationFailure) as info:
        interpolate_roots_of_unity(targets, config)
    assert info.value.best_residual > 1e-8
