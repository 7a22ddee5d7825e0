"""Command line front end: outputs, formats, exit codes, determinism."""

import json

import pytest

from twistalex.cli import main
from twistalex.cyclotomic import field
from twistalex.laurent import parse_laurent
from twistalex.groups import presentation_to_str
from twistalex.reps import (representation_to_str, trefoil_presentation,
                            trefoil_sl2_rep, trivial_rep)


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    root = tmp_path_factory.mktemp("data")
    P = trefoil_presentation()
    paths = {}
    paths["group"] = root / "trefoil.grp"
    paths["group"].write_text(presentation_to_str(P))
    paths["alpha1"] = root / "alpha1.rep"
    paths["alpha1"].write_text(representation_to_str(trefoil_sl2_rep(1)))
    paths["alpha2"] = root / "alpha2.rep"
    paths["alpha2"].write_text(representation_to_str(trefoil_sl2_rep(2)))
    paths["alpha0"] = root / "alpha0.rep"
    paths["alpha0"].write_text(representation_to_str(trefoil_sl2_rep(0)))
    paths["trivial"] = root / "trivial.rep"
    paths["trivial"].write_text(representation_to_str(trivial_rep(P, 1)))
    return {k: str(v) for k, v in paths.items()}


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_delta_trivial(files, capsys):
    code, out, _ = run(["delta", "--group", files["group"],
                        "--rep", files["trivial"]], capsys)
    assert code == 0
    assert "Delta0 = t - 1" in out
    assert "Delta1 = t^2 - t + 1" in out
    assert "(up to units c*t^k)" in out


def test_delta_sl2(files, capsys):
    code, out, _ = run(["delta", "--group", files["group"],
                        "--rep", files["alpha1"]], capsys)
    assert code == 0
    assert "Delta0 = 1" in out
    assert "Delta1 = t^2 + 1" in out


def test_delta_twist(files, capsys):
    code, out, _ = run(["delta", "--group", files["group"],
                        "--rep", files["trivial"],
                        "--twist-lambda", "z", "--twist-pow", "1"], capsys)
    assert code == 0
    assert "Delta0 = t + (z^3 - z)" in out


def test_delta_json_roundtrip(files, capsys):
    code, out, _ = run(["delta", "--group", files["group"],
                        "--rep", files["alpha1"], "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert set(doc) >= {"delta0", "wada_num", "wada_den", "delta1",
                        "removed_generator"}
    K = field(12)
    p = parse_laurent(K, doc["delta1"])
    assert str(p) == doc["delta1"]


def test_duality_verbs(files, capsys):
    code, out, _ = run(["duality", "--group", files["group"],
                        "--rep-a", files["alpha1"],
                        "--rep-b", files["alpha2"]], capsys)
    assert code == 0
    assert "degree 0 associated under t -> 1/t: yes" in out
    assert "degree 1 associated under t -> 1/t: yes" in out


def test_cohom_raw_ad_tensor(files, capsys):
    code, out, _ = run(["cohom", "--group", files["group"],
                        "--rep", files["alpha1"], "--module", "ad"], capsys)
    assert code == 0
    assert "h0 = 0" in out and "h1 = 1" in out
    spec = f"tensor:{files['alpha1']},{files['trivial']},z,3"
    code, out, _ = run(["cohom", "--group", files["group"],
                        "--module", spec], capsys)
    assert code == 0
    assert "h0 = 0" in out and "h1 = 1" in out and "h2 = 1" in out
    assert "aspherical" in out


def test_deform_classification(files, capsys):
    code, out, _ = run(["deform", "--group", files["group"],
                        "--alpha", files["alpha1"],
                        "--beta", files["trivial"],
                        "--lambda", "z"], capsys)
    assert code == 0
    assert "classification: DEFORMABLE" in out
    code, out, _ = run(["deform", "--group", files["group"],
                        "--alpha", files["alpha1"],
                        "--beta", files["trivial"],
                        "--lambda", "1"], capsys)
    assert code == 0
    assert "classification: NO_IRRED_DEFORMATION" in out


def test_deform_hypothesis_exit_code(files, capsys):
    code, out, _ = run(["deform", "--group", files["group"],
                        "--alpha", files["alpha0"],
                        "--beta", files["trivial"],
                        "--lambda", "z"], capsys)
    assert code == 3
    assert "alpha is reducible" in out


def test_locus(files, capsys):
    code, out, _ = run(["locus", "--group", files["group"],
                        "--alpha", files["alpha1"],
                        "--beta", files["trivial"]], capsys)
    assert code == 0
    assert "locus polynomial = t^2 + 1" in out


def test_charvar(files, capsys):
    code, out, _ = run(["charvar", "--s", "2/3", "--t", "2/3"], capsys)
    assert code == 0
    assert "trace(m) = 0" in out
    assert "trace(m^-1) = 0" in out


def test_suite_fast(files, capsys):
    code, out, _ = run(["suite", "--fast"], capsys)
    assert code == 0
    assert "suite result: all checks passed" in out
    assert "[PASS]" in out and "[FAIL]" not in out


def test_suite_json(files, capsys):
    code, out, _ = run(["suite", "--fast", "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert all(rec["status"] for rec in doc)
    assert {"id", "label", "status", "evidence"} <= set(doc[0])


def test_input_error_exit_code(files, capsys):
    code, _, err = run(["delta", "--group", "/does/not/exist",
                        "--rep", files["alpha1"]], capsys)
    assert code == 1
    assert "FileNotFoundError" in err
    code, _, err = run(["charvar", "--s", "q", "--t", "0"], capsys)
    assert code == 1
    assert "ParseError" in err


def test_deterministic_output(files, capsys):
    args = ["deform", "--group", files["group"],
            "--alpha", files["alpha1"], "--beta", files["trivial"],
            "--lambda", "z^5"]
    _, out1, _ = run(args, capsys)
    _, out2, _ = run(args, capsys)
    assert out1 == out2
