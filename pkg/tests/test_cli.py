import json
import subprocess
import sys
from pathlib import Path

import pytest

from skewconvex.cli import main, parse_config
from skewconvex.errors import ConfigError

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "skewconvex", *args],
                          capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def cfg(name):
    return str(CONFIGS / f"{name}.ini")


def test_eval_defined():
    assert run("eval", "--config", cfg("quaternion"), "--expr", "(T-{i})^-1", "--at", "2j") == \
        (0, "-1/3i-2/3j\n", "")


def test_eval_undefined():
    code, out, _ = run("eval", "--config", cfg("quaternion"), "--expr", "(T-{i})^-1", "--at", "j")
    assert code == 2
    assert out == "undefined: point conjugate to a denominator root class\n"


def test_convex_count():
    assert run("convex", "--config", cfg("f4"), "--orbit", "1", "--count") == (0, "16\n", "")


def test_eval_json(capsys):
    code = main(["eval", "--config", cfg("quaternion"), "--expr", "(T-{i})^-1", "--at", "2j", "--json"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert out == {"defined": True, "value": "-1/3i-2/3j",
                   "excluded_classes": [{"representative": "k", "invariant": "Re = 0, norm = 1"}],
                   "complete": True}


def test_domain(capsys):
    assert main(["domain", "--config", cfg("gaussian"), "--expr", "(T*T-{5})^-1"]) == 0
    assert capsys.readouterr().out.splitlines()[0].endswith("(norm = 5)")
    assert main(["domain", "--config", cfg("gaussian"), "--expr", "(T*T-{5})^-1", "--at", "1+2i"]) == 2


def test_gcd_lcm_orbit(capsys):
    assert main(["gcd", "--config", cfg("quaternion"), "--p", "T^2+{1}", "--q", "T-{j}"]) == 0
    assert main(["lcm", "--config", cfg("quaternion"), "--p", "T-{i}", "--q", "T-{j}"]) == 0
    assert main(["orbit", "--config", cfg("f9"), "--at", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[:2] == ["T + {-j}", "T^2 + {1}"]
    assert json.loads(lines[2]) == ["1", "2", "g", "2*g"]


def test_convex_list(capsys):
    assert main(["convex", "--config", cfg("f4"), "--orbit", "1", "--list"]) == 0
    tables = json.loads(capsys.readouterr().out)
    assert len(tables) == 16 and all(sorted(t) == ["1", "g", "g+1"] for t in tables)


def test_invert(tmp_path, capsys):
    table = tmp_path / "f.json"
    table.write_text(json.dumps({"1": "g", "g": "g", "g+1": "g"}))
    assert main(["invert", "--config", cfg("f4"), "--orbit", "1", "--table", str(table)]) == 0
    inv = json.loads(capsys.readouterr().out)
    # constant g has inverse constant g^-1 = g+1
    assert inv == {"1": "g+1", "g": "g+1", "g+1": "g+1"}
    table.write_text(json.dumps({"1": "0", "g": "g", "g+1": "g"}))
    assert main(["invert", "--config", cfg("f4"), "--orbit", "1", "--table", str(table)]) == 2
    table.write_text(json.dumps({"1": "1"}))
    assert main(["invert", "--config", cfg("f4"), "--orbit", "1", "--table", str(table)]) == 1


def test_verify(capsys):
    assert main(["verify", "--config", cfg("f4"), "--suite", "metro", "--seed", "3"]) == 0
    assert all(line.startswith("PASS") for line in capsys.readouterr().out.splitlines())
    assert main(["verify", "--config", cfg("gaussian"), "--suite", "nearring"]) == 1


@pytest.mark.parametrize("args", [
    ["eval", "--config", "missing.ini", "--expr", "T", "--at", "1"],
    ["eval", "--config", cfg("quaternion"), "--expr", "T +", "--at", "1"],
    ["eval", "--config", cfg("quaternion"), "--expr", "T", "--at", "q"],
    ["orbit", "--config", cfg("quaternion"), "--at", "1"],
    ["gcd", "--config", cfg("quaternion"), "--p", "T^-1", "--q", "T"],
])
def test_errors_exit_1(args, capsys):
    assert main(args) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_usage_errors_exit_1():
    code, out, err = run("eval", "--config", cfg("f4"))
    assert code == 1 and "usage" in err and out == ""
    assert run("frobnicate")[0] == 1


def test_config_parsing():
    c = parse_config("[field]\nkind = fq\np = 3\nmodulus = [1, 0, 1]\nderivation = g\njson = yes\n")
    assert c.json and c.field.order == 9 and c.field.has_derivation
    assert parse_config("[field]\nkind = gaussian\nsigma = id\n").field.sigma_is_identity
    assert parse_config("[field]\nkind = quaternion\n[output]\njson = true\n").json
    for bad in ["kind = fq", "[field]\nkind = octonion", "[field]\nkind = fq\np = 2",
                "[field]\nkind = fq\np = 2\nmodulus = 1, 0, 1", "[field]\nkind = gaussian\njson = maybe"]:
        with pytest.raises(ConfigError):
            parse_config(bad)
