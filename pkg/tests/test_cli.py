import json
import subprocess
import sys

import pytest

from staircase.cli import run


def out(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr().out


def test_zn1(capsys):
    assert out(capsys, ["zn", "--n", "1"]) == (0, "alpha*y + delta*y + beta + gamma\n")


def test_zn_evaluation(capsys):
    code, text = out(capsys, ["zn", "--n", "3", "--alpha", "1", "--beta", "1", "--gamma", "1",
                              "--delta", "1", "--q", "1", "--y", "1"])
    assert code == 0 and text.strip() == str(4 ** 3 * 6)


def test_enumerate_count(capsys):
    assert out(capsys, ["enumerate", "--n", "2", "--count"]) == (0, "32\n")
    assert out(capsys, ["enumerate", "--type", "●○", "--count"]) == (0, "8\n")


def test_enumerate_json_roundtrip(capsys, tmp_path):
    code, text = out(capsys, ["enumerate", "--n", "2", "--json"])
    lines = text.splitlines()
    assert code == 0 and len(lines) == 32
    f = tmp_path / "t.json"
    f.write_text(lines[5])
    code, text = out(capsys, ["bijection", "phi", "--in", str(f), "--json"])
    assert code == 0 and set(json.loads(text)) == {"perm", "sign1", "sign2"}


def test_zsigma_methods_agree(capsys):
    texts = [out(capsys, ["zsigma", "--sigma", "BWWB", "--method", m, "--alpha", "1", "--beta", "1",
                          "--gamma", "0", "--delta", "0"])[1] for m in ("enum", "ntw", "delta0")]
    assert len(set(texts)) == 1


def test_moments_all(capsys):
    code, text = out(capsys, ["moments", "--n", "3", "--a", "1/2", "--b", "1/3", "--c", "1/5",
                              "--d", "1/7", "--q", "1/11", "--method", "all"])
    assert code == 0 and text.splitlines()[-1] == "AGREE"


def test_degenerate_exit(capsys):
    code = run(["moments", "--n", "2", "--a", "1", "--b", "1", "--c", "1", "--d", "1", "--q", "0"])
    assert code == 3
    assert "abcd" in capsys.readouterr().err


def test_usage_exit(capsys):
    assert run(["bogus"]) == 2
    assert run(["zn"]) == 2
    assert run(["moments", "--n", "1", "--a", "x/y"]) == 2


def test_asep_verify(capsys):
    code, text = out(capsys, ["asep", "verify", "--n", "2", "--alpha", "1/2", "--beta", "1/3",
                              "--gamma", "1/5", "--delta", "1/7", "--q", "1/11", "--u", "1/2"])
    assert code == 0
    assert text.count("MATCH") == 4 and "MISMATCH" not in text


@pytest.mark.parametrize("what", ["fcrossing", "dyck", "table1", "cwth"])
def test_check_subcommands(capsys, what):
    code, text = out(capsys, ["check", what, "--n", "3"])
    assert code == 0 and text.startswith("PASS")


def test_check_json(capsys):
    code, text = out(capsys, ["--json", "check", "criterion", "--k", "2"])
    assert code == 0 and json.loads(text)["status"] == "PASS"


def test_deterministic():
    argv = [sys.executable, "-m", "staircase", "enumerate", "--n", "3"]
    a = subprocess.run(argv, capture_output=True, text=True).stdout
    b = subprocess.run(argv, capture_output=True, text=True).stdout
    assert a == b and a.count("\n\n") == 383
