import cmath
import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def disc_points(max_radius=0.95):
    return st.builds(
        lambda r, t: r * cmath.exp(1j * t),
        st.floats(0, max_radius),
        st.floats(0, 2 * math.pi),
    )


def unit_points():
    return st.floats(0, 2 * math.pi).map(lambda t: cmath.exp(1j * t))


def tetra_closed_form_inside(x, margin=0.0):
    """Membership of the open tetrablock from a known closed-form criterion.

    Independent of the mu machinery: ``|x1 - conj(x2) x3| + |x1 x2 - x3| < 1 - |x2|^2``.
    Returns the signed slack so callers can stay away from the boundary.
    """
    x1, x2, x3 = x
    return 1 - abs(x2) ** 2 - abs(x1 - x2.conjugate() * x3) - abs(x1 * x2 - x3)


def _norm2(a, b, c, d):
    """Largest singular value of ``[[a, b], [c, d]]``, elementwise over arrays."""
    fro = abs(a) ** 2 + abs(b) ** 2 + abs(c) ** 2 + abs(d) ** 2
    det = abs(a * d - b * c)
    return np.sqrt(0.5 * (fro + np.sqrt(np.maximum(fro * fro - 4 * det * det, 0))))


def d_scaling_mu(A):
    """``inf_d ||D A D^-1||`` over ``D = diag(d, 1)``, which equals mu for two scalar blocks."""
    m = A.to_array()

    def f(logd):
        d = np.exp(logd)
        return _norm2(m[0, 0], m[0, 1] * d, m[1, 0] / d, m[1, 1])

    grid = np.linspace(-25, 25, 2001)
    k = int(np.argmin(f(grid)))
    lo, hi = grid[max(k - 1, 0)], grid[min(k + 1, len(grid) - 1)]
    for _ in range(100):
        m1, m2 = lo + (hi - lo) / 3, hi - (hi - lo) / 3
        if f(m1) < f(m2):
            hi = m2
        else:
            lo = m1
    return float(f(0.5 * (lo + hi)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
