"""Command line interface: ``mudomains <subcommand> [input]``.

Payloads are JSON read from a file argument or standard input; results are
JSON on standard output. Exit status is 0 on success, 1 for malformed input,
2 for domain errors and 3 for solver failures (including a failing selftest).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
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
    tetra_inverse,
)
from .blaschke import BlaschkeProduct, InterpConfig, interpolate_roots_of_unity, interpolation_residual
from .complex_core import DiscAutomorphism, aut_compose, aut_inverse
from .domains import (
    SAMPLE_LABELS,
    PentaStratum,
    Region,
    TetraStratum,
    classify_b_penta,
    classify_b_tetra,
    classify_gamma_n,
    sample_points,
)
from .errors import DomainError, MalformedInput, SolverError, UnknownStratum
from .mu_ssv import Membership, in_penta, in_tetra, mu, penta_realization, tetra_realization
from .orbits import decompose
from .points import Gamma2Point, GammaNPoint, PentaPoint, TetraPoint
from .selftest import Scale, run_all
from .serialize import (
    decode_aut,
    decode_complex,
    decode_mat2,
    decode_point,
    encode_aut,
    encode_blaschke,
    encode_bracket,
    encode_decomposition,
    encode_point,
)

EXIT_OK, EXIT_MALFORMED, EXIT_DOMAIN, EXIT_SOLVER = 0, 1, 2, 3


class SelftestFailed(SolverError):
    pass


# -- subcommand bodies -------------------------------------------------------------


def _gamma_labels(x, tol):
    c = classify_gamma_n(x, tol)
    prefix = "Gamma2" if isinstance(x, Gamma2Point) else "GammaN"
    out = {"region": c.region.value, "on_boundary": c.on_boundary, "defect": c.defect}
    if c.on_boundary:
        labels = ["b" + prefix]
        if c.royal is not None:
            labels.append("bGamma2Royal" if c.royal else "bGamma2NonRoyal")
    elif c.region is Region.INTERIOR:
        labels = [prefix + "Interior"]
    elif c.region is Region.CLOSURE:
        labels = [prefix + "Closure"]
    else:
        labels = [prefix + "Outside"]
    if c.royal is not None:
        out["royal"] = c.royal
        out["algebraic_on_boundary"] = c.algebraic_on_boundary
    return labels, out


def _block_labels(x, tol, resolution):
    if isinstance(x, TetraPoint):
        c, name = classify_b_tetra(x, tol), "Tetra"
        sub = {TetraStratum.TRIANGULAR: "bTetraTriangular", TetraStratum.NON_TRIANGULAR: "bTetraNonTriangular"}
    else:
        c, name = classify_b_penta(x, tol), "Penta"
        sub = {PentaStratum.ROYAL: "bPentaRoyal", PentaStratum.NON_ROYAL: "bPentaNonRoyal"}
    out = {"boundary_stratum": c.stratum.value, "defect": c.defect}
    if c.on_boundary:
        return ["b" + name, sub[c.stratum]], out
    if isinstance(x, TetraPoint):
        member = in_tetra(x, tol, resolution)
        bracket = mu(tetra_realization(x), "diag", resolution)
    else:
        member = in_penta(x, tol, resolution)
        bracket = mu(penta_realization(x), "penta", resolution)
    out["membership"] = member.value
    out["mu"] = encode_bracket(bracket)
    suffix = {Membership.INSIDE: "Interior", Membership.BOUNDARY_BAND: "BoundaryBand", Membership.OUTSIDE: "Outside"}
    return [name + suffix[member]], out


def classify_point(x, tol=1e-9, resolution=1e-4) -> dict:
    if isinstance(x, (Gamma2Point, GammaNPoint)):
        labels, extra = _gamma_labels(x, tol)
    else:
        labels, extra = _block_labels(x, tol, resolution)
    return {"kind": x.kind, "stratum": labels[0], "labels": labels, **extra}


def _each(payload, fn):
    """Apply ``fn`` to one payload object or to every element of a list."""
    if isinstance(payload, list):
        return [fn(item) for item in payload]
    return fn(payload)


def cmd_classify(payload, args):
    return _each(payload, lambda obj: classify_point(decode_point(obj), args.tol, args.resolution))


def _apply(params, x):
    if isinstance(params, DiscAutomorphism) and isinstance(x, Gamma2Point):
        return tau_apply(params, x)
    if isinstance(params, BlaschkeProduct) and isinstance(x, (Gamma2Point, GammaNPoint)):
        y = tau_blaschke_apply(params, x)
        return Gamma2Point(*y.coeffs) if isinstance(x, Gamma2Point) else y
    if isinstance(params, TetraAutParams) and isinstance(x, TetraPoint):
        return tetra_apply(params, x)
    if isinstance(params, PentaAutParams) and isinstance(x, PentaPoint):
        return penta_apply(params, x)
    raise MalformedInput(f"{type(params).__name__} cannot act on a {x.kind} point")


def _compose(a, b):
    pairs = (
        (DiscAutomorphism, aut_compose),
        (TetraAutParams, tetra_compose),
        (PentaAutParams, penta_compose),
    )
    for cls, fn in pairs:
        if isinstance(a, cls) and isinstance(b, cls):
            return fn(a, b)
    raise MalformedInput("compose needs two parameter sets of the same kind")


def _inverse(a):
    if isinstance(a, DiscAutomorphism):
        return aut_inverse(a)
    if isinstance(a, TetraAutParams):
        return tetra_inverse(a)
    if isinstance(a, PentaAutParams):
        return penta_inverse(a)
    raise MalformedInput("inverse is defined for gamma2, tetra and penta parameters")


def cmd_aut(payload, args):
    if not isinstance(payload, dict):
        raise MalformedInput("aut expects an object")
    op = payload.get("op", "apply")
    if op == "apply":
        params = decode_aut(payload.get("aut", payload.get("params")))
        return _each(payload.get("point", payload.get("points")), lambda obj: encode_point(_apply(params, decode_point(obj))))
    if op == "compose":
        return encode_aut(_compose(decode_aut(payload.get("a")), decode_aut(payload.get("b"))))
    if op == "inverse":
        return encode_aut(_inverse(decode_aut(payload.get("aut", payload.get("params")))))
    raise MalformedInput(f"unknown aut op {op!r}")


def cmd_decompose(payload, args):
    return _each(payload, lambda obj: encode_decomposition(decompose(decode_point(obj), args.tol)))


def cmd_mu(payload, args):
    if isinstance(payload, dict) and "matrix" in payload:
        A = decode_mat2(payload["matrix"])
        structure = payload.get("structure", args.structure)
    else:
        A, structure = decode_mat2(payload), args.structure
    try:
        return encode_bracket(mu(A, structure, args.resolution))
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc


def cmd_sample(payload, args):
    if args.stratum not in SAMPLE_LABELS:
        raise UnknownStratum(args.stratum)
    return [encode_point(x) for x in sample_points(args.stratum, args.samples, args.n, args.seed)]


def cmd_interp(payload, args):
    targets = payload.get("targets") if isinstance(payload, dict) else payload
    if not isinstance(targets, list) or not targets:
        raise MalformedInput("interp expects a non-empty list of targets")
    targets = [decode_complex(t) for t in targets]
    B = interpolate_roots_of_unity(targets, InterpConfig(seed=args.seed))
    return {**encode_blaschke(B), "degree": B.degree, "residual": interpolation_residual(B, targets)}


def cmd_selftest(payload, args):
    results = run_all(Scale.from_samples(args.samples), args.seed)
    for r in results:
        print(r.line(), file=sys.stderr)
    report = {
        "passed": all(r.passed for r in results),
        "checks": [{"name": r.name, "passed": r.passed, "metrics": r.metrics} for r in results],
    }
    if not report["passed"]:
        _emit(report, args)
        raise SelftestFailed("one or more checks failed")
    return report


COMMANDS = {
    "classify": (cmd_classify, True, "classify points of the three domains"),
    "aut": (cmd_aut, True, "apply, compose or invert automorphisms"),
    "decompose": (cmd_decompose, True, "orbit decomposition of boundary points"),
    "mu": (cmd_mu, True, "structured singular value bracket of a 2x2 matrix"),
    "sample": (cmd_sample, False, "draw random points from a stratum"),
    "interp": (cmd_interp, True, "Blaschke interpolation at roots of unity"),
    "selftest": (cmd_selftest, False, "run the property checks"),
}


# -- output --------------------------------------------------------------------------


def _flatten(obj, prefix=""):
    """Flatten nested JSON into dotted columns; ``[re, im]`` pairs become two columns."""
    if isinstance(obj, list) and len(obj) == 2 and all(isinstance(v, float) for v in obj):
        return {f"{prefix}_re": obj[0], f"{prefix}_im": obj[1]}
    if isinstance(obj, dict):
        items = obj.items()
    elif isinstance(obj, list):
        items = enumerate(obj)
    else:
        return {prefix: obj}
    out = {}
    for k, v in items:
        out.update(_flatten(v, f"{prefix}.{k}" if prefix else str(k)))
    return out


def _to_csv(result) -> str:
    rows = [_flatten(r) for r in (result if isinstance(result, list) else [result])]
    columns = []
    for row in rows:
        columns += [c for c in row if c not in columns]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _emit(result, args):
    if args.csv:
        sys.stdout.write(_to_csv(result))
    else:
        sys.stdout.write(json.dumps(result, indent=2 if args.pretty else None, allow_nan=False) + "\n")


# -- entry point -----------------------------------------------------------------------


def _positive(kind):
    def parse(text):
        value = kind(text)
        if value <= 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return value

    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive(float), default=1e-9, help="classification tolerance")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=_positive(int), default=1000)
    common.add_argument("--resolution", type=_positive(float), default=1e-4, help="mu bracket resolution")
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    common.add_argument("--csv", action="store_true", help="write CSV instead of JSON")

    parser = argparse.ArgumentParser(prog="mudomains", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)
    for name, (_, takes_input, help_text) in COMMANDS.items():
        sub = subs.add_parser(name, parents=[common], help=help_text, description=help_text)
        if takes_input:
            sub.add_argument("input", nargs="?", default="-", help="JSON file (default: standard input)")
        if name == "mu":
            sub.add_argument("--structure", default="diag", choices=["full", "scalar", "diag", "penta"])
        if name == "sample":
            sub.add_argument("stratum", help="one of: " + ", ".join(SAMPLE_LABELS))
            sub.add_argument("--n", type=int, default=2, help="number of roots for GammaN strata")
    return parser


def _read_payload(path):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_MALFORMED
    fn, takes_input, _ = COMMANDS[args.command]
    try:
        payload = _read_payload(args.input) if takes_input else None
        result = fn(payload, args)
    except (MalformedInput, UnknownStratum, OSError) as exc:
        print(f"mudomains: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except DomainError as exc:
        print(f"mudomains: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except SolverError as exc:
        print(f"mudomains: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (ValueError, TypeError, KeyError) as exc:
        print(f"mudomains: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    _emit(result, args)
    return EXIT_OK


def main():
    sys.exit(run())
