"""Point types for the symmetrized polydisc, tetrablock and pentablock."""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar


def _c(x) -> complex:
    return complex(x)


@dataclass(frozen=True)
class Gamma2Point:
    s: complex
    p: complex
    kind: ClassVar[str] = "gamma2"

    def __post_init__(self):
        object.__setattr__(self, "s", _c(self.s))
        object.__setattr__(self, "p", _c(self.p))

    @property
    def coords(self) -> tuple[complex, ...]:
        return (self.s, self.p)


@dataclass(frozen=True)
class GammaNPoint:
    """Elementary symmetric values ``(e_1, ..., e_n)`` of ``n`` points."""

    coeffs: tuple[complex, ...]
    kind: ClassVar[str] = "gammaN"

    def __post_init__(self):
        coeffs = tuple(_c(c) for c in self.coeffs)
        if len(coeffs) < 1:
            raise ValueError("GammaNPoint needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def coords(self) -> tuple[complex, ...]:
        return self.coeffs


@dataclass(frozen=True)
class TetraPoint:
    x1: complex
    x2: complex
    x3: complex
    kind: ClassVar[str] = "tetra"

    def __post_init__(self):
        for name in ("x1", "x2", "x3"):
            object.__setattr__(self, name, _c(getattr(self, name)))

    @property
    def coords(self) -> tuple[complex, ...]:
        return (self.x1, self.x2, self.x3)


@dataclass(frozen=True)
class PentaPoint:
    a: complex
    s: complex
    p: complex
    kind: ClassVar[str] = "penta"

    def __post_init__(self):
        for name in ("a", "s", "p"):
            object.__setattr__(self, name, _c(getattr(self, name)))

    @property
    def coords(self) -> tuple[complex, ...]:
        return (self.a, self.s, self.p)


def coord_distance(x, y) -> float:
    """Max coordinate error between two points of the same kind."""
    if x.kind != y.kind or len(x.coords) != len(y.coords):
        raise ValueError(f"cannot compare {x.kind} with {y.kind}")
    return max(abs(a - b) for a, b in zip(x.coords, y.coords))
