import json
import subprocess
import sys

import pytest

from realzeros.cli import run
from realzeros.poly import parse


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def envelope(capsys, *argv):
    code, out, _ = call(capsys, *argv)
    return code, json.loads(out)


def test_roots_envelope(capsys):
    code, env = envelope(capsys, "roots", "--poly", "x^2-2", "--refine", "1/10000")
    assert code == 0
    assert env["exact"] is True and env["command"] == "roots"
    r = env["result"]
    assert r["distinct_real_roots"] == 2 and r["real_rooted"] and not r["pf"]
    assert abs(float(env["approximations"]["roots"][1]) - 2 ** 0.5) < 1e-4


def test_roots_csv(capsys):
    code, out, _ = call(capsys, "roots", "--poly", "x^2-1", "--csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "index,lo,hi,multiplicity,approx" and len(lines) == 3


def test_family_gen_text(capsys):
    code, out, _ = call(capsys, "family", "gen", "--name", "narayana", "--n", "3")
    assert code == 0 and out.strip() == "q + 3*q^2 + q^3"
    assert parse(out) == parse("x+3x^2+x^3")


def test_family_gen_params(capsys):
    code, out, _ = call(capsys, "family", "gen", "--name", "jacobi", "--n", "1", "--param", "alpha=1", "--param", "beta=1")
    assert code == 0 and parse(out) == parse("2x")
    code, out, _ = call(capsys, "family", "gen", "--name", "multiset", "--param", "ns=2")
    assert parse(out) == parse("x+x^2")


def test_family_verify(capsys):
    code, env = envelope(capsys, "family", "verify", "--name", "derangement", "--n", "12")
    assert code == 0 and env["result"]["conclusion_pass"]
    code, env = envelope(capsys, "family", "verify", "--name", "legendre", "--n", "6", "--param", "literal=true")
    assert code == 1


def test_check_commands(capsys):
    code, env = envelope(capsys, "check", "thm-ffg", "--f", "x^2-1", "--g", "x", "--a", "x", "--b", "-1")
    assert code == 0 and env["result"]["hypotheses_pass"]
    assert parse(env["result"]["constructed"]["F"]) == parse("x^3-2x")
    code, env = envelope(capsys, "check", "thm-ffgk", "--f", "x^2", "--gj", "x", "--gj", "x", "--a", "x", "--bj", "-1", "--bj", "-1")
    assert code == 0
    code, env = envelope(capsys, "check", "cor-ppp", "--spec", "eulerian", "--n-max", "8")
    assert code == 0
    code, env = envelope(capsys, "check", "cor-haglund", "--f", "x+1", "--g", "1", "--a", "1", "--b", "0", "--d", "1")
    assert code == 0


def test_check_missing_argument(capsys):
    code, _, err = call(capsys, "check", "thm-ffg", "--f", "x")
    assert code == 2 and "missing" in err


def test_harness_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("REALZEROS_SEED", "5")
    code, env = envelope(capsys, "check", "harness", "--name", "thm_ffg", "--instances", "20")
    assert code == 0 and env["inputs"]["seed"] == "5"


def test_genus_counterexample(capsys):
    code, env = envelope(capsys, "genus", "run", "--family", "7", "--k", "1")
    assert code == 1
    u = parse(env["result"]["constructed"]["genus_polynomials"][0])
    assert u == 8 * parse("10+339x+2855x^2+2736x^3+972x^4")
    approx = [float(t) for t in env["approximations"]["last_member_real_roots"]]
    assert len(approx) == 2


def test_genus_nice_and_decompose(capsys, tmp_path):
    m = tmp_path / "m.txt"
    m.write_text("2\n3x\n3\n2x\n3x+1000\n")
    code, env = envelope(capsys, "genus", "nice", "--matrix", str(m))
    assert code == 1 and env["result"]["nice"] is False
    assert env["result"]["det_negative_at"] == "-1"
    code, env = envelope(capsys, "genus", "decompose", "--family", "6")
    assert code == 0 and len(env["result"]["factors"]) == 2


def test_matching(capsys, tmp_path):
    g = tmp_path / "g.txt"
    g.write_text("3\n0 1\n1 2\n")
    code, env = envelope(capsys, "matching", "--graph", str(g), "--verify")
    assert code == 0 and parse(env["result"]["matching_polynomial"]) == parse("x^3-2x")
    b = tmp_path / "b.txt"
    b.write_text("0 0\n0 1\n1 0\n1 1\n")
    code, env = envelope(capsys, "matching", "--board", str(b))
    assert parse(env["result"]["rook_polynomial"]) == parse("1+4x+2x^2")


def test_diagnose(capsys):
    code, env = envelope(capsys, "diagnose", "--poly", "1+4x+x^2")
    assert code == 0 and env["result"]["modes"] == [1]


@pytest.mark.parametrize("argv", [
    ["roots", "--poly", "x^^2"],
    ["bogus"],
    ["family", "gen", "--name", "jacobi", "--n", "2", "--param", "alpha=-2"],
    ["matching", "--graph", "/nonexistent/file"],
    ["genus", "run", "--family", "12", "--k", "1"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = call(capsys, *argv)
    assert code == 2


def test_exit_codes_deterministic(capsys):
    codes = {run(["genus", "run", "--family", "7", "--k", "2"]) for _ in range(3)}
    capsys.readouterr()
    assert codes == {1}


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "realzeros", "family", "gen", "--name", "eulerian", "--n", "3"],
                         capture_output=True, text=True, check=True)
    assert parse(out.stdout) == parse("x+4x^2+x^3")
