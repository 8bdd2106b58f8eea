"""Command-line interface: exit codes, formats, determinism."""

import json

import pytest

from mopoly.cli import main

JP_ARGS = ["--family", "jp", "--alpha0", "1/2", "--alpha1", "1/3",
           "--alpha2", "3/4"]


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_coeffs_json(capsys):
    code, out, err = run(capsys, ["coeffs"] + JP_ARGS + ["--n", "2"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "mopoly/1"
    assert doc["command"] == "coeffs"
    assert doc["family"] == "jp"
    assert doc["b"][0] == pytest.approx(8 / 17)
    assert doc["c"][0] == 0 and doc["d"][0] == 0


def test_coeffs_rational_precision(capsys):
    code, out, _ = run(capsys, ["coeffs"] + JP_ARGS +
                       ["--n", "1", "--precision", "rational"])
    assert code == 0
    doc = json.loads(out)
    assert doc["b"] == ["8/17", "173/391"]
    assert doc["c"] == ["0", "432/6647"]


def test_coeffs_csv(capsys):
    code, out, _ = run(capsys, ["coeffs", "--family", "mh", "--c1", "-1/2",
                                "--c2", "2/3", "--n", "2", "--format", "csv"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,b,c,d"
    assert len(lines) == 4
    assert lines[1].startswith("0,-0.25,0,0")


def test_negative_fraction_parses(capsys):
    # a leading minus on a ratio must read as a value, not an option
    code, out, _ = run(capsys, ["coeffs", "--family", "mh", "--c1", "-1/2",
                                "--c2", "2/3", "--n", "1",
                                "--precision", "rational"])
    assert code == 0
    doc = json.loads(out)
    assert doc["params"]["c1"] == "-1/2"
    assert doc["b"] == ["-1/4", "1/3"]


def test_unknown_family_parameter_fails(capsys):
    code, _, err = run(capsys, ["coeffs"] + JP_ARGS + ["--beta", "1",
                                                       "--n", "2"])
    assert code == 1
    assert "not a parameter of family jp" in err


def test_integer_parameter_gap_fails(capsys):
    code, _, err = run(capsys, ["coeffs", "--family", "jp", "--alpha0", "1/2",
                                "--alpha1", "1/3", "--alpha2", "4/3",
                                "--n", "2"])
    assert code == 1
    assert "integer" in err


def test_rational_zeros_refused(capsys):
    code, _, err = run(capsys, ["zeros"] + JP_ARGS +
                       ["--N", "5", "--precision", "rational"])
    assert code == 1
    assert "irrational" in err


def test_usage_error(capsys):
    assert run(capsys, ["nonsense"])[0] == 64
    assert run(capsys, [])[0] == 64


def test_verify_ok(capsys):
    code, out, _ = run(capsys, ["verify", "--family", "mh", "--c1", "-1/2",
                                "--c2", "2/3"])
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_poly_methods_agree(capsys):
    base = ["poly"] + JP_ARGS + ["--N", "4", "--precision", "extended"]
    _, out_rec, _ = run(capsys, base + ["--method", "recurrence"])
    _, out_exp, _ = run(capsys, base + ["--method", "explicit"])
    _, out_orc, _ = run(capsys, base + ["--method", "oracle"])
    rec = json.loads(out_rec)["coeffs"]
    exp = json.loads(out_exp)["coeffs"]
    orc = json.loads(out_orc)["coeffs"]
    for a, b in zip(rec, exp):
        assert float(a) == pytest.approx(float(b), abs=1e-40)
    for a, b in zip(rec, orc):
        assert float(a) == pytest.approx(float(b), abs=1e-40)


def test_byte_identical_reruns(capsys):
    argv = ["zeros"] + JP_ARGS + ["--N", "8"]
    first = run(capsys, argv)
    second = run(capsys, argv)
    assert first == second
    assert first[0] == 0


def test_precision_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("MOPOLY_PRECISION", "rational")
    code, out, _ = run(capsys, ["coeffs"] + JP_ARGS + ["--n", "1"])
    assert code == 0
    doc = json.loads(out)
    assert doc["precision"] == "rational"
    assert doc["b"][0] == "8/17"


def test_out_file(capsys, tmp_path):
    target = tmp_path / "coeffs.csv"
    code, out, _ = run(capsys, ["coeffs"] + JP_ARGS +
                       ["--n", "3", "--format", "csv", "--out", str(target)])
    assert code == 0
    text = target.read_text()
    assert text.startswith("n,b,c,d")
    assert len(text.strip().splitlines()) == 5
