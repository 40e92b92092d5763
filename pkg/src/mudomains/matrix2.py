"""Closed-form kernels for 2x2 complex matrices."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .points import Gamma2Point, PentaPoint, TetraPoint


@dataclass(frozen=True)
class Mat2:
    a11: complex = 0j
    a12: complex = 0j
    a21: complex = 0j
    a22: complex = 0j

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @classmethod
    def from_array(cls, m) -> Mat2:
        return cls(m[0][0], m[0][1], m[1][0], m[1][1])

    @classmethod
    def diag(cls, d1, d2) -> Mat2:
        return cls(d1, 0, 0, d2)

    def to_array(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a21, self.a22]], dtype=complex)

    @property
    def trace(self) -> complex:
        return self.a11 + self.a22

    @property
    def det(self) -> complex:
        return self.a11 * self.a22 - self.a12 * self.a21

    def scale(self, c: complex) -> Mat2:
        return Mat2(c * self.a11, c * self.a12, c * self.a21, c * self.a22)


def op_norm(A: Mat2) -> float:
    """Largest singular value: ``sigma^2 = (T + sqrt(T^2 - 4D)) / 2``.

    ``T = tr(A* A)`` is the squared Frobenius norm and ``D = |det A|^2``. The
    discriminant is evaluated as ``(m11 - m22)^2 + 4 |m12|^2`` with
    ``M = A A*``, which avoids the cancellation of ``T^2 - 4D`` when the two
    singular values are close. Entries are first scaled to at most 1 so the
    squares neither underflow nor overflow.
    """
    t = max(abs(A.a11), abs(A.a12), abs(A.a21), abs(A.a22))
    if t == 0:
        return 0.0
    A = Mat2(A.a11 / t, A.a12 / t, A.a21 / t, A.a22 / t)
    m11 = abs(A.a11) ** 2 + abs(A.a12) ** 2
    m22 = abs(A.a21) ** 2 + abs(A.a22) ** 2
    m12 = A.a11 * A.a21.conjugate() + A.a12 * A.a22.conjugate()
    disc = (m11 - m22) ** 2 + 4 * abs(m12) ** 2
    return t * math.sqrt((m11 + m22 + math.sqrt(disc)) / 2)


def eigenvalues(A: Mat2) -> tuple[complex, complex]:
    """Roots of ``lambda^2 - tr(A) lambda + det(A)``."""
    return quadratic_roots(A.trace, A.det)


def quadratic_roots(s: complex, p: complex) -> tuple[complex, complex]:
    """Roots of ``z^2 - s z + p`` without cancellation in the larger root."""
    s, p = complex(s), complex(p)
    root = cmath.sqrt(s * s - 4 * p)
    # pick the sign making |s + sign*root| maximal
    q = s + root if abs(s + root) >= abs(s - root) else s - root
    if q == 0:
        return 0j, 0j
    z1 = q / 2
    z2 = p / z1 if z1 != 0 else s - z1
    return z1, z2


def spectral_radius(A: Mat2) -> float:
    # scaled so the determinant stays in the normal range
    t = max(abs(A.a11), abs(A.a12), abs(A.a21), abs(A.a22))
    if t == 0:
        return 0.0
    return t * max(abs(z) for z in eigenvalues(Mat2(A.a11 / t, A.a12 / t, A.a21 / t, A.a22 / t)))


def project_tetra(A: Mat2) -> TetraPoint:
    return TetraPoint(A.a11, A.a22, A.det)


def project_penta(A: Mat2) -> PentaPoint:
    return PentaPoint(A.a21, A.trace, A.det)


def project_gamma2(A: Mat2) -> Gamma2Point:
    return Gamma2Point(A.trace, A.det)
