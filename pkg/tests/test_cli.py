import json
import re
import subprocess
import sys

import pytest

from gaussforms.cli import run
from gaussforms.gaussian import parse_gaussian
from gaussforms.quaternary import evaluate


def call(capsys, *argv):
    status = run(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_represent_text(capsys):
    status, out, _ = call(capsys, "represent", "1+3i")
    assert status == 0
    lhs, rhs = out.strip().split(" = ")
    assert lhs == "1+3i"
    terms = rhs.split(" + ")
    assert len(terms) == 4 and terms[1].startswith("i(") and terms[3].startswith("i(")
    coords = [parse_gaussian(re.fullmatch(r"i?\((.*)\)\^2", t).group(1)) for t in terms]
    assert evaluate(coords) == parse_gaussian("1+3i")


def test_classify_and_niven(capsys):
    assert call(capsys, "classify", "1+i")[1] == "B\n"
    assert call(capsys, "classify", "2+i")[1] == "C\n"
    assert call(capsys, "classify", "3")[1] == "A\n"
    assert call(capsys, "niven", "2", "1")[1] == "not representable\n"
    status, out, _ = call(capsys, "niven", "1", "-1")
    assert status == 0 and out.startswith("representable: 1-2i = ")


def test_factor_and_nu(capsys):
    assert call(capsys, "factor", "-3+4i")[1] == "i^2 * (2-i)^2\n"
    assert call(capsys, "nu", "5")[1] == "2\n"
    assert call(capsys, "nu", "-i")[1] == "0\n"


def test_represent_binary(capsys):
    status, out, _ = call(capsys, "represent-binary", "3")
    assert status == 0 and out.startswith("3 = (")
    status, out, _ = call(capsys, "represent-binary", "2+i")
    assert status == 0 and out.startswith("2+i = i(")


@pytest.mark.parametrize("argv", [["classify", "2+k"], ["represent", "1+"], ["factor", "3 i"]])
def test_parse_error_exit_2_with_caret(capsys, argv):
    status, out, err = call(capsys, *argv)
    assert status == 2 and out == ""
    assert "^" in err


def test_usage_errors(capsys):
    assert call(capsys, "classify", "5")[0] == 2
    status, _, err = call(capsys, "classify", "-3")
    assert status == 2 and "canonical associate is 3" in err
    assert call(capsys, "factor", "0")[0] == 2
    assert call(capsys, "niven", "x", "1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        run(["sweep", "bogus"])
    assert exc.value.code == 2


def test_negative_literals_as_positionals(capsys):
    status, out, _ = call(capsys, "represent", "-3+4i")
    assert status == 0 and out.startswith("-3+4i = ")
    status, out, _ = call(capsys, "represent", "-2i")
    assert status == 0 and out.startswith("-2i = ")


def test_json_schema_and_stability(capsys):
    for argv in (["represent", "1+3i"], ["factor", "12"], ["classify", "1+i"], ["niven", "2", "1"],
                 ["represent-binary", "7"], ["ramanujan", "1212", "--bound", "200"],
                 ["sweep", "universality", "--bound", "20"]):
        first = call(capsys, "--json", *argv)[1]
        second = call(capsys, *argv, "--json")[1]
        assert first == second
        doc = json.loads(first)
        assert doc["command"] == argv[0]
        assert {"command", "input", "result"} <= set(doc) <= {"command", "input", "result", "witness", "report"}


def test_quiet(capsys):
    assert call(capsys, "--quiet", "represent", "5") == (0, "", "")
    assert call(capsys, "ramanujan", "[1,1,1,8]", "--bound", "50", "--quiet") == (1, "", "")


def test_ramanujan(capsys):
    status, out, _ = call(capsys, "ramanujan", "1248", "--bound", "500")
    assert status == 0 and out.startswith("[1,2,4,8]")
    status, out, _ = call(capsys, "ramanujan", "x=t, y=(1-i)t, z=t, w=(1-i)t", "--bound", "500")
    assert status == 0 and out.startswith("[1,2,1,2]")
    status, out, _ = call(capsys, "--json", "ramanujan", "[1,1,1,8]", "--bound", "50")
    assert status == 1 and json.loads(out)["result"]["first_miss"] == 7
    assert call(capsys, "ramanujan", "x=(1+i)t")[0] == 2


def test_sweeps_and_output_file(capsys, tmp_path):
    path = tmp_path / "r.json"
    status, out, _ = call(capsys, "sweep", "composition", "--bound", "100", "--seed", "4", "--output", str(path))
    assert status == 0 and out.startswith("composition: PASS")
    assert json.loads(path.read_text())["bounds"] == {"component_range": 50, "seed": 4, "trials": 100}
    for kind, bound in (("lemma1", "100"), ("niven", "3"), ("descent", "200"), ("class-c", "200"),
                        ("nu", "50"), ("ramanujan", "100"), ("universality", "10")):
        assert call(capsys, "sweep", kind, "--bound", bound)[0] == 0


def test_sweep_failure_exits_1(capsys, monkeypatch):
    from gaussforms import binary

    monkeypatch.setattr(binary, "niven_mordell_representable", lambda a, b: True)
    status, out, _ = call(capsys, "sweep", "niven", "--bound", "2")
    assert status == 1 and "FAIL" in out


def test_workers_flag_does_not_change_output(capsys):
    a = call(capsys, "--json", "sweep", "lemma1", "--bound", "200", "--workers", "1")[1]
    b = call(capsys, "--json", "sweep", "lemma1", "--bound", "200", "--workers", "2")[1]
    assert a == b


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "gaussforms", "classify", "1+i"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "B\n"
