import io
import json
import subprocess
import sys

import pytest

from optb.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def json_lines(*argv):
    code, out, err = call("--format", "json", *argv)
    assert code == 0, err
    return [json.loads(line) for line in out.splitlines()]


def test_optb_19_7():
    (rec,) = json_lines("optb", "19", "7")
    assert rec["answer"] == "YES"
    assert "T(3,2) @ -19/3" in rec["surgeries"]
    code, out, _ = call("optb", "19", "7")
    assert code == 0 and "T(3,2) @ -19/3" in out and "YES" in out


def test_gof_4_1():
    (rec,) = json_lines("gof", "4", "1")
    assert rec["count"] == 3 and rec["case"] == "FOUR_ONE"


def test_h1_infinite():
    (rec,) = json_lines("h1", "--word", "y^4")
    assert rec["order"] == "infinite"
    code, out, _ = call("h1", "--word", "y^4")
    assert code == 0 and "infinite" in out


def test_h1_surgery():
    (rec,) = json_lines("h1", "--word", "w y^5", "--surgery", "3/1")
    assert rec["torsion"] == [12] and rec["order"] == 12


def test_h1_type():
    (rec,) = json_lines("h1-type", "--type", "D", "--d", "2", "--m", "5")
    assert rec["word"] == "d^2 w y^5" and rec["order"] == 4
    (rec,) = json_lines("h1-type", "--type", "A", "--a", "1")
    assert rec["order"] == 1
    (rec,) = json_lines("h1-type", "--type", "B", "--d", "1", "--a", "1,0,2")
    assert rec["order"] >= 4


def test_candidates():
    recs = json_lines("candidates", "--d-range=-2:2", "--bound", "4")
    assert len(recs) == 15
    assert {r["family"] for r in recs} == {1, 2, 3}
    assert json_lines("candidates", "--d-range", "1:0", "--bound", "4") == []


def test_reduce():
    (rec,) = json_lines("reduce", "--family", "2", "--d", "1", "--slope", "7/2")
    assert rec == {"knot": "left-trefoil", "p": 7, "q": -5, "slope": "7/-5"}
    (rec,) = json_lines("reduce", "--family", "3", "--d", "0", "--slope=19/-3")
    assert rec["knot"] == "right-trefoil" and rec["q"] == -3


def test_moser_trefoil_homeo_class():
    (rec,) = json_lines("moser", "3", "2", "-19", "3")
    assert rec["lens"] == "L(19,12)" and rec["canonical"] == "L(19,7)"
    (rec,) = json_lines("moser", "3", "2", "5", "1")
    assert rec["lens"] is None and rec["lens_yielding"] is False
    recs = json_lines("trefoil", "19", "7")
    assert [r["surgery"] for r in recs] == ["T(3,2) @ -19/3", "T(3,2) @ 19/-3"]
    (rec,) = json_lines("homeo", "19", "12", "19", "7")
    assert rec["homeomorphic"] is True
    (rec,) = json_lines("class", "19", "2")
    assert rec["class"] == [2, 9, 10, 17] and rec["canonical"] == 2


def test_scan_to_stdout_and_file(tmp_path):
    recs = json_lines("scan", "--beta", "2", "--max-m", "50", "--primes-only")
    assert all(r["answer"] == "NO" for r in recs if r["m"] >= 11)
    path = tmp_path / "s.jsonl"
    first = json_lines("scan", "--beta", "2", "--max-m", "20", "--primes-only", "--out", str(path))
    second = json_lines("scan", "--beta", "2", "--max-m", "50", "--primes-only", "--out", str(path))
    assert [r["m"] for r in first] == [3, 5, 7, 11, 13, 17, 19]
    assert [r["m"] for r in second] == [23, 29, 31, 37, 41, 43, 47]


def test_table_list_output():
    code, out, _ = call("scan", "--beta", "1", "--max-m", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[:2] == ["m", "n"] and len(lines) == 1 + 5


@pytest.mark.parametrize("argv", [
    ("optb", "15", "2"),
    ("optb", "12", "4"),
    ("h1", "--word", "x^0"),
    ("h1", "--word", "x y", "--surgery", "1/2"),
    ("h1-type", "--type", "E", "--m", "0"),
    ("h1-type", "--type", "A", "--a", "0,0"),
    ("moser", "2", "3", "1", "1"),
    ("reduce", "--family", "1", "--d", "0", "--slope", "4/2"),
])
def test_domain_errors_exit_1(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == "" and "error" in err


def test_domain_error_text_is_verbatim():
    code, _, err = call("optb", "15", "2")
    assert "L(15,2): |H1| = 15 is not prime" in err


@pytest.mark.parametrize("argv", [
    (),
    ("bogus",),
    ("optb", "19"),
    ("optb", "x", "7"),
    ("h1",),
    ("h1", "--word", "x", "--surgery", "3"),
    ("candidates", "--d-range", "1-2", "--bound", "3"),
    ("h1-type", "--type", "A", "--m", "3"),
    ("h1-type", "--type", "C", "--a", "1"),
    ("scan", "--beta", "5", "--max-m", "3"),
    ("--format", "xml", "gof", "4", "1"),
])
def test_usage_errors_exit_2(argv):
    code, _, err = call(*argv)
    assert code == 2


def test_usage_error_names_flag():
    _, _, err = call("candidates", "--d-range", "1-2", "--bound", "3")
    assert "--d-range" in err


def test_composite_override():
    (rec,) = json_lines("optb", "15", "2", "--allow-composite")
    assert rec["outside_hypotheses"] is True


def test_json_round_trip():
    for argv in (("optb", "19", "2"), ("gof", "12", "5"), ("h1", "--word", "w y^5"),
                 ("scan", "--beta", "2", "--max-m", "30")):
        code, out, _ = call("--format", "json", *argv)
        for line in out.splitlines():
            assert json.dumps(json.loads(line), sort_keys=True) == line


def test_env_default_output(monkeypatch):
    monkeypatch.setenv("OPTB_OUTPUT", "json")
    code, out, _ = call("gof", "4", "1")
    assert json.loads(out)["count"] == 3


def test_deterministic():
    assert call("scan", "--beta", "2", "--max-m", "60") == call("scan", "--beta", "2", "--max-m", "60")


def test_help_documents_schema():
    code, out, _ = call("scan", "--help")
    assert code == 0
    assert "optb-scan" in out and "congruence_check" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "optb", "gof", "19", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "NONE" in proc.stdout
