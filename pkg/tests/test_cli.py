import json

import pytest

from burst2d.cli import main, parse_indices, UsageError

from conftest import EX2_ZEROS, R1, R3


def _zeros(zs):
    return ";".join(f"{a},{b}" for a, b in zs)


@pytest.fixture
def ex2_cfg(tmp_path, capsys):
    path = tmp_path / "code.json"
    rc = main(["codegen", "--n", "3", "--m", "5", "--zeros", _zeros(EX2_ZEROS),
               "--indicator", "0,0;1,0;0,1", "--out", str(path)])
    assert rc == 0
    capsys.readouterr()
    return path


def test_parse_indices():
    assert parse_indices("0,0; 1,0;0,1;") == [(0, 0), (1, 0), (0, 1)]
    with pytest.raises(UsageError):
        parse_indices("0-1")


def test_codegen_summary(tmp_path, capsys):
    path = tmp_path / "c.json"
    assert main(["codegen", "--n", "3", "--m", "5", "--zeros", _zeros(EX2_ZEROS),
                 "--indicator", "0,0;1,0;0,1", "--out", str(path)]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["k_bits"] == 4
    assert summary["disjoint"] is True
    assert summary["warnings"] == []
    assert len(summary["closure"]) == 11
    cfg = json.loads(path.read_text())
    assert cfg["lambda"] == 4 and cfg["primitive_poly"] == 19


def test_codegen_warns_on_collision(capsys):
    assert main(["codegen", "--n", "3", "--m", "5", "--zeros", "0,0;1,1"]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["disjoint"] is False
    assert "warning:" in captured.err


def test_codegen_even_dimension(capsys):
    assert main(["codegen", "--n", "4", "--m", "5", "--zeros", "0,0"]) == 2
    assert "even dimension" in capsys.readouterr().err


def test_encode_deterministic_and_verify(ex2_cfg, tmp_path, capsys):
    outs = []
    for k in range(2):
        p = tmp_path / f"cw{k}.txt"
        assert main(["encode", "--code", str(ex2_cfg), "--random", "--seed", "7", "--out", str(p)]) == 0
        outs.append(p.read_text())
    assert outs[0] == outs[1]
    assert main(["verify", "--code", str(ex2_cfg), "--in", str(tmp_path / "cw0.txt")]) == 0
    assert capsys.readouterr().out.strip() == "codeword"


def test_encode_bad_bits(ex2_cfg, capsys):
    assert main(["encode", "--code", str(ex2_cfg), "--bits", "10"]) == 2
    assert main(["encode", "--code", str(ex2_cfg), "--bits", "10x1"]) == 2


def test_inject_decode_round_trip(ex2_cfg, tmp_path, capsys):
    z = tmp_path / "z.txt"
    z.write_text("00000\n00000\n00000\n")
    r = tmp_path / "r.txt"
    errs = '[{"pattern":"h2","at":[0,0]},{"pattern":"v2","at":[0,2]}]'
    assert main(["inject", "--in", str(z), "--errors", errs, "--out", str(r)]) == 0
    assert r.read_text() == R1
    assert main(["verify", "--code", str(ex2_cfg), "--in", str(r)]) == 1
    capsys.readouterr()
    fixed = tmp_path / "fixed.txt"
    assert main(["decode", "--code", str(ex2_cfg), "--in", str(r), "--out", str(fixed)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("Corrected; c1=1 c2=1; flipped (0,0)(0,1)(0,2)(1,2)")
    assert fixed.read_text() == z.read_text()


def test_decode_json_and_uncorrectable(ex2_cfg, tmp_path, capsys):
    r = tmp_path / "r.txt"
    r.write_text("00000\n01000\n00000\n")
    assert main(["decode", "--code", str(ex2_cfg), "--in", str(r), "--json"]) == 3
    data = json.loads(capsys.readouterr().out)
    assert data["kind"] == "uncorrectable" and data["grid"] is None


def test_decode_shape_mismatch(ex2_cfg, tmp_path, capsys):
    r = tmp_path / "r.txt"
    r.write_text("0000\n0000\n0000\n")
    assert main(["decode", "--code", str(ex2_cfg), "--in", str(r)]) == 2


def test_inject_bounded_rejects_wrap(tmp_path, capsys):
    z = tmp_path / "z.txt"
    z.write_text(R3)
    assert main(["inject", "--in", str(z), "--errors", '[{"pattern":"h2","at":[0,4]}]', "--bounded"]) == 2
    assert main(["inject", "--in", str(z), "--errors", '[{"pattern":"h2","at":[0,4]}]']) == 0


def test_tampered_config(ex2_cfg, capsys):
    cfg = json.loads(ex2_cfg.read_text())
    cfg["k_bits"] = 5
    ex2_cfg.write_text(json.dumps(cfg))
    assert main(["verify", "--code", str(ex2_cfg), "--in", "-"]) == 2


def test_simulate(ex2_cfg, capsys):
    assert main(["simulate", "--code", str(ex2_cfg), "--trials", "50", "--seed", "3"]) == 0
    a = capsys.readouterr().out
    assert main(["simulate", "--code", str(ex2_cfg), "--trials", "50", "--seed", "3"]) == 0
    b = capsys.readouterr().out
    assert a == b
    rep = json.loads(a)
    assert rep["miscorrected"] == 0
    assert rep["corrected"] + rep["uncorrectable"] == 50


def test_simulate_bad_class(ex2_cfg, capsys):
    assert main(["simulate", "--code", str(ex2_cfg), "--error-class", "multi:h2", "--trials", "5"]) == 2


def test_missing_subcommand(capsys):
    assert main([]) == 2
