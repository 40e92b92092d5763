"""JSON encoding of points, matrices, automorphism parameters and results.

Complex numbers are always two-element arrays ``[re, im]``. Decoders raise
:class:`MalformedInput` on any schema mismatch.
"""

from __future__ import annotations

import math

from .automorphisms import PentaAutParams, TetraAutParams
from .blaschke import BlaschkeProduct
from .complex_core import DiscAutomorphism
from .errors import MalformedInput
from .matrix2 import Mat2
from .mu_ssv import MuBracket
from .orbits import Decomposition
from .points import Gamma2Point, GammaNPoint, PentaPoint, TetraPoint

POINT_KINDS = {
    "gamma2": (Gamma2Point, 2),
    "gammaN": (GammaNPoint, None),
    "tetra": (TetraPoint, 3),
    "penta": (PentaPoint, 3),
}


def _real(x: float):
    x = float(x)
    if math.isfinite(x):
        return x
    return None


def encode_complex(z) -> list:
    z = complex(z)
    # adding 0.0 folds -0.0 into 0.0 so equal values print identically
    return [z.real + 0.0, z.imag + 0.0]


def decode_complex(obj) -> complex:
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        return complex(obj)
    if (
        isinstance(obj, (list, tuple))
        and len(obj) == 2
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj)
    ):
        return complex(obj[0], obj[1])
    raise MalformedInput(f"expected [re, im], got {obj!r}")


def _field(obj, key):
    if not isinstance(obj, dict):
        raise MalformedInput(f"expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise MalformedInput(f"missing field {key!r}")
    return obj[key]


# -- points and matrices ---------------------------------------------------------


def encode_point(x) -> dict:
    return {"kind": x.kind, "coords": [encode_complex(c) for c in x.coords]}


def decode_point(obj):
    kind = _field(obj, "kind")
    coords = _field(obj, "coords")
    if kind not in POINT_KINDS:
        raise MalformedInput(f"unknown point kind {kind!r}")
    if not isinstance(coords, list):
        raise MalformedInput("coords must be a list")
    cls, size = POINT_KINDS[kind]
    values = [decode_complex(c) for c in coords]
    if size is not None and len(values) != size:
        raise MalformedInput(f"{kind} point needs {size} coordinates, got {len(values)}")
    if cls is GammaNPoint:
        if len(values) < 2:
            raise MalformedInput("gammaN point needs at least 2 coordinates")
        return GammaNPoint(tuple(values))
    return cls(*values)


def encode_mat2(A: Mat2) -> dict:
    return {k: encode_complex(getattr(A, k)) for k in ("a11", "a12", "a21", "a22")}


def decode_mat2(obj) -> Mat2:
    if isinstance(obj, list):
        if len(obj) != 2 or any(not isinstance(r, list) or len(r) != 2 for r in obj):
            raise MalformedInput("matrix must be 2x2")
        return Mat2(*(decode_complex(v) for row in obj for v in row))
    return Mat2(*(decode_complex(_field(obj, k)) for k in ("a11", "a12", "a21", "a22")))


# -- automorphisms ---------------------------------------------------------------


def encode_disc_aut(v: DiscAutomorphism) -> dict:
    return {"eta": encode_complex(v.eta), "alpha": encode_complex(v.alpha)}


def encode_blaschke(B: BlaschkeProduct) -> dict:
    return {"unimodular": encode_complex(B.unimodular), "zeros": [encode_complex(a) for a in B.zeros]}


def decode_blaschke(obj) -> BlaschkeProduct:
    zeros = _field(obj, "zeros")
    if not isinstance(zeros, list):
        raise MalformedInput("zeros must be a list")
    return BlaschkeProduct(decode_complex(_field(obj, "unimodular")), tuple(decode_complex(a) for a in zeros))


def encode_aut(params) -> dict:
    if isinstance(params, DiscAutomorphism):
        return {"kind": "gamma2", "params": encode_disc_aut(params)}
    if isinstance(params, TetraAutParams):
        return {
            "kind": "tetra",
            "params": {
                "xi1": encode_complex(params.xi1),
                "z1": encode_complex(params.z1),
                "xi2": encode_complex(params.xi2),
                "z2": encode_complex(params.z2),
                "flip": params.flip,
            },
        }
    if isinstance(params, PentaAutParams):
        return {"kind": "penta", "params": {"omega": encode_complex(params.omega), **encode_disc_aut(params.v)}}
    if isinstance(params, BlaschkeProduct):
        return {"kind": "blaschke", "params": encode_blaschke(params)}
    raise TypeError(f"cannot encode {type(params).__name__}")


def _decode_disc_aut(p) -> DiscAutomorphism:
    return DiscAutomorphism(decode_complex(_field(p, "eta")), decode_complex(_field(p, "alpha")))


def decode_aut(obj):
    kind = _field(obj, "kind")
    p = _field(obj, "params")
    if kind == "gamma2":
        return _decode_disc_aut(p)
    if kind == "tetra":
        flip = p.get("flip", False) if isinstance(p, dict) else False
        if not isinstance(flip, bool):
            raise MalformedInput("flip must be a boolean")
        return TetraAutParams(*(decode_complex(_field(p, k)) for k in ("xi1", "z1", "xi2", "z2")), flip)
    if kind == "penta":
        return PentaAutParams(decode_complex(_field(p, "omega")), _decode_disc_aut(p))
    if kind == "blaschke":
        return decode_blaschke(p)
    raise MalformedInput(f"unknown automorphism kind {kind!r}")


# -- results ---------------------------------------------------------------------


def encode_decomposition(d: Decomposition) -> dict:
    return {
        "stratum": d.stratum,
        "params": encode_aut(d.params),
        "canonical": encode_point(d.canonical),
        "residual": float(d.residual),
    }


def encode_bracket(b: MuBracket) -> dict:
    return {
        "lower": _real(b.lower),
        "upper": _real(b.upper),
        "structure": b.structure.value,
        "converged": b.converged,
    }
