import io
import json
import subprocess
import sys

import pytest
from hypothesis import given

from conftest import disc_points, unit_points
from mudomains.automorphisms import PentaAutParams, TetraAutParams
from mudomains.blaschke import BlaschkeProduct
from mudomains.cli import EXIT_DOMAIN, EXIT_MALFORMED, EXIT_OK, EXIT_SOLVER, _flatten, run
from mudomains.complex_core import DiscAutomorphism
from mudomains.errors import MalformedInput
from mudomains.matrix2 import Mat2
from mudomains.points import Gamma2Point, GammaNPoint, PentaPoint, TetraPoint
from mudomains.serialize import (
    decode_aut,
    decode_complex,
    decode_mat2,
    decode_point,
    encode_aut,
    encode_complex,
    encode_mat2,
    encode_point,
)

# -- serialization -------------------------------------------------------------


def test_complex_examples():
    assert encode_complex(1 - 2j) == [1.0, -2.0]
    assert encode_complex(complex(-0.0, -0.0)) == [0.0, 0.0]
    assert decode_complex([0.5, 1]) == 0.5 + 1j
    assert decode_complex(3) == 3


@pytest.mark.parametrize("bad", [[1], [1, 2, 3], ["a", 1], True, None, {"re": 1}])
def test_complex_rejects(bad):
    with pytest.raises(MalformedInput):
        decode_complex(bad)


@given(disc_points(5.0))
def test_complex_round_trip(z):
    assert decode_complex(encode_complex(z)) == z


@pytest.mark.parametrize(
    "x",
    [Gamma2Point(0.5, 1j), GammaNPoint((1, 2, 3)), TetraPoint(0.1, 0.2j, -0.3), PentaPoint(1, 0, 1)],
)
def test_point_round_trip(x):
    assert decode_point(json.loads(json.dumps(encode_point(x)))) == x


@pytest.mark.parametrize(
    "obj",
    [
        {"kind": "tetra", "coords": [[0, 0], [0, 0]]},
        {"kind": "disc", "coords": [[0, 0]]},
        {"coords": [[0, 0]]},
        {"kind": "gammaN", "coords": [[0, 0]]},
        [1, 2],
    ],
)
def test_point_rejects(obj):
    with pytest.raises(MalformedInput):
        decode_point(obj)


def test_matrix_forms():
    A = Mat2(1, 2j, -1, 0.5)
    assert decode_mat2(encode_mat2(A)) == A
    assert decode_mat2([[[1, 0], [0, 2]], [[-1, 0], 0.5]]) == A
    with pytest.raises(MalformedInput):
        decode_mat2([[1, 2]])


@pytest.mark.parametrize(
    "params",
    [
        DiscAutomorphism(1j, 0.3),
        TetraAutParams(1j, 0.2, -1, 0.1j, True),
        PentaAutParams(-1j, DiscAutomorphism(1, 0.5j)),
        BlaschkeProduct(1, (0.2, -0.3j)),
    ],
)
def test_aut_round_trip(params):
    assert decode_aut(json.loads(json.dumps(encode_aut(params)))) == params


def test_aut_rejects_unknown_kind():
    with pytest.raises(MalformedInput):
        decode_aut({"kind": "moebius", "params": {}})


# -- CLI -------------------------------------------------------------------------


def cli(capsys, monkeypatch, argv, payload=None):
    if payload is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(payload)))
    code = run(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() and "--csv" not in argv else out)


def pt(kind, *coords):
    return {"kind": kind, "coords": [[complex(c).real, complex(c).imag] for c in coords]}


@pytest.mark.parametrize(
    "point,stratum",
    [
        (pt("gamma2", 2, 1), "bGamma2"),
        (pt("gamma2", 0, 0), "Gamma2Interior"),
        (pt("gamma2", 3, 0), "Gamma2Outside"),
        (pt("tetra", 0, 0, 1), "bTetra"),
        (pt("tetra", 0.1, 0.1, 0), "TetraInterior"),
        (pt("tetra", 2, 0, 0), "TetraOutside"),
        (pt("penta", 0, 2, 1), "bPenta"),
        (pt("penta", 0.5, 0, 0), "PentaInterior"),
    ],
)
def test_classify(capsys, monkeypatch, point, stratum):
    code, out = cli(capsys, monkeypatch, ["classify"], point)
    assert code == EXIT_OK
    assert out["stratum"] == stratum


def test_classify_royal_label(capsys, monkeypatch):
    _, out = cli(capsys, monkeypatch, ["classify"], pt("gamma2", 2, 1))
    assert out["labels"] == ["bGamma2", "bGamma2Royal"]
    _, out = cli(capsys, monkeypatch, ["classify"], pt("tetra", 0.5, 0.5, 1))
    assert out["labels"] == ["bTetra", "bTetraNonTriangular"]


def test_classify_batch_and_file(capsys, monkeypatch, tmp_path):
    path = tmp_path / "pts.json"
    path.write_text(json.dumps([pt("gamma2", 0, 1), pt("penta", 1, 0, 1)]))
    code, out = cli(capsys, monkeypatch, ["classify", str(path)])
    assert code == EXIT_OK
    assert [o["stratum"] for o in out] == ["bGamma2", "bPenta"]


def test_aut_apply_compose_inverse(capsys, monkeypatch):
    aut = {"kind": "gamma2", "params": {"eta": [1, 0], "alpha": [0, 0]}}
    code, out = cli(capsys, monkeypatch, ["aut"], {"op": "apply", "aut": aut, "point": pt("gamma2", 2, 1)})
    assert code == EXIT_OK and out["coords"] == [[-2.0, 0.0], [1.0, 0.0]]
    code, out = cli(capsys, monkeypatch, ["aut"], {"op": "compose", "a": aut, "b": aut})
    assert code == EXIT_OK and out["kind"] == "gamma2"
    inv = {"kind": "gamma2", "params": {"eta": [-1, 0], "alpha": [0.5, 0]}}
    code, out = cli(capsys, monkeypatch, ["aut"], {"op": "inverse", "aut": inv})
    assert code == EXIT_OK
    assert out["params"]["alpha"] == [-0.5, 0.0] and out["params"]["eta"] == [-1.0, 0.0]


def test_aut_outside_domain_is_domain_error(capsys, monkeypatch):
    aut = {"kind": "tetra", "params": {"xi1": [1, 0], "z1": [0, 0], "xi2": [1, 0], "z2": [0, 0]}}
    code, _ = cli(capsys, monkeypatch, ["aut"], {"op": "apply", "aut": aut, "point": pt("tetra", 2, 0, 0)})
    assert code == EXIT_DOMAIN


def test_decompose(capsys, monkeypatch):
    code, out = cli(capsys, monkeypatch, ["decompose"], pt("penta", 1j, 0, 1))
    assert code == EXIT_OK
    assert out["stratum"] == "NonRoyalP"
    assert out["params"]["params"]["omega"] == pytest.approx([0.0, -1.0])
    assert out["residual"] < 1e-8


def test_decompose_not_on_boundary(capsys, monkeypatch):
    code, _ = cli(capsys, monkeypatch, ["decompose"], pt("gamma2", 0, 0))
    assert code == EXIT_DOMAIN


def test_mu(capsys, monkeypatch):
    code, out = cli(capsys, monkeypatch, ["mu", "--structure", "full"], [[[0, 0], [1, 0]], [[0, 0], [0, 0]]])
    assert code == EXIT_OK and out["lower"] == pytest.approx(1) and out["structure"] == "full"
    code, out = cli(capsys, monkeypatch, ["mu"], {"matrix": [[1, 0], [0, 1]], "structure": "penta"})
    assert code == EXIT_OK and abs(out["upper"] - 1) < 1e-4
    code, _ = cli(capsys, monkeypatch, ["mu"], {"matrix": [[1, 0], [0, 1]], "structure": "bad"})
    assert code == EXIT_MALFORMED


def test_sample_and_csv(capsys, monkeypatch):
    code, out = cli(capsys, monkeypatch, ["sample", "bTetra", "--samples", "3", "--seed", "1"])
    assert code == EXIT_OK and len(out) == 3
    code, text = cli(capsys, monkeypatch, ["sample", "bTetra", "--samples", "3", "--seed", "1", "--csv"])
    lines = text.strip().splitlines()
    assert len(lines) == 4 and lines[0].startswith("kind,coords.0_re")


def test_sample_unknown_stratum(capsys, monkeypatch):
    code, _ = cli(capsys, monkeypatch, ["sample", "Nowhere"])
    assert code == EXIT_MALFORMED


def test_interp(capsys, monkeypatch):
    code, out = cli(capsys, monkeypatch, ["interp"], {"targets": [[1, 0], [0, 1], [-1, 0]]})
    assert code == EXIT_OK and out["residual"] < 1e-8


def test_interp_off_circle_target(capsys, monkeypatch):
    code, _ = cli(capsys, monkeypatch, ["interp"], {"targets": [[0.5, 0], [0, 1]]})
    assert code == EXIT_DOMAIN


@pytest.mark.parametrize("argv,payload", [(["classify"], "not json"), (["classify"], {"kind": "tetra"}), (["frobnicate"], None)])
def test_malformed(capsys, monkeypatch, argv, payload):
    if payload is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(payload if isinstance(payload, str) else json.dumps(payload)))
    assert run(argv) == EXIT_MALFORMED


def test_small_selftest(capsys, monkeypatch):
    code, out = cli(capsys, monkeypatch, ["selftest", "--samples", "50"])
    assert code == EXIT_OK and out["passed"]
    assert len(out["checks"]) == 8


def test_selftest_failure_exit_code(capsys, monkeypatch):
    from mudomains import cli as cli_module
    from mudomains.selftest import CheckResult

    monkeypatch.setattr(cli_module, "run_all", lambda scale, seed: [CheckResult("x", False, {}, 0.0)])
    assert run(["selftest"]) == EXIT_SOLVER


def test_flatten():
    assert _flatten({"a": [1.0, 2.0], "b": {"c": 3}}) == {"a_re": 1.0, "a_im": 2.0, "b.c": 3}


def test_module_entry_point_pipeline():
    sample = subprocess.run(
        [sys.executable, "-m", "mudomains", "sample", "bPenta", "--samples", "5"],
        capture_output=True,
        text=True,
        check=True,
    )
    result = subprocess.run(
        [sys.executable, "-m", "mudomains", "classify"], input=sample.stdout, capture_output=True, text=True
    )
    assert result.returncode == 0
    assert all(o["stratum"] == "bPenta" for o in json.loads(result.stdout))
