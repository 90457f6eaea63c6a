import json
import subprocess
import sys

import pytest

from omkit.cli import main

M = {"rows": [["1", "1", "2", "0"], ["0", "0", "1", "2"]]}
M2 = {"rows": [["1", "0", "1", "0"], ["0", "1", "1", "1"]]}
BOX = [
    {"lower": "2", "upper": "5", "lower_closed": True, "upper_closed": False},
    {"lower": "5", "upper": "oo", "lower_closed": True, "upper_closed": False},
    {"lower": "0", "upper": "8", "lower_closed": False, "upper_closed": False},
    {"lower": "-oo", "upper": "5", "lower_closed": False, "upper_closed": True},
]
W_RUN = {"rows": [["1", "0", "1", "1", "1"], ["0", "1", "1", "1", "0"]]}
WT_RUN = {"variables": ["a", "b", "c"], "rows": [["1", "0", "a", "a - c", "1"], ["0", "1", "b", "b", "0"]]}
W_EX = {"rows": [["0", "0", "1", "1", "-1", "0"], ["1", "-1", "0", "0", "0", "-1"], ["0", "0", "1", "-1", "0", "0"]]}
WT_EX = {"variables": ["a"], "rows": [["1", "1", "0", "0", "-1", "a"], ["1", "-1", "0", "0", "0", "0"], ["0", "0", "1", "-1", "0", "0"]]}
NET = {
    "species": ["A", "B", "C", "D", "E"],
    "variables": ["a", "b", "c"],
    "vertices": [
        {"id": 1, "y": ["1", "1", "0", "0", "0"], "ytilde": ["a", "b", "0", "0", "0"]},
        {"id": 2, "y": ["0", "0", "1", "0", "0"]},
        {"id": 3, "y": ["0", "0", "0", "1", "0"], "ytilde": ["c", "0", "0", "1", "0"]},
        {"id": 4, "y": ["1", "0", "0", "0", "0"]},
        {"id": 5, "y": ["0", "0", "0", "0", "1"]},
    ],
    "edges": [[1, 2], [2, 1], [2, 3], [3, 2], [4, 5], [5, 4]],
}


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, data in [("M", M), ("M2", M2), ("I", BOX), ("W", W_RUN), ("Wt", WT_RUN), ("Wex", W_EX),
                       ("Wtex", WT_EX), ("net", NET)]:
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(data))
        out[name] = str(path)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_elementary_vectors(files, capsys):
    code, out, _ = run(capsys, "elementary-vectors", "--matrix", files["M"])
    assert code == 0
    assert out.strip() == "[(1, -1, 0, 0), (4, 0, -2, 1), (0, 4, -2, 1)]"
    code, out, _ = run(capsys, "elementary-vectors", "--matrix", files["M"], "--output", "json")
    assert json.loads(out) == [[1, -1, 0, 0], [4, 0, -2, 1], [0, 4, -2, 1]]
    _, out, _ = run(capsys, "elementary-vectors", "--matrix", files["M"], "--no-dedup")
    assert out.count("(") == 4


def test_minors_and_chirotope(files, capsys):
    assert run(capsys, "minors", "--matrix", files["M"])[1].strip() == "[0, 1, 2, 1, 2, 4]"
    assert run(capsys, "chirotope", "--matrix", files["M"])[1].strip() == "(0+++++)"


def test_cocircuits_and_covectors(files, capsys):
    _, out, _ = run(capsys, "cocircuits", "--matrix", files["M"], "--output", "json")
    assert sorted(json.loads(out)) == sorted(["-+00", "-0+-", "+0-+", "+-00", "0-+-", "0+-+"])
    _, out, _ = run(capsys, "covectors", "--matrix", files["M"])
    assert out.count("(") == 13 and "(+--+)" in out


def test_exists_vector(files, capsys):
    code, out, _ = run(capsys, "exists-vector", "--matrix", files["M2"], "--intervals", files["I"], "--witness")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "intervals: [[2, 5), [5, +oo), (0, 8), (-oo, 5]]"
    assert lines[1] == "feasible: true"
    assert lines[2].startswith("witness: ")


def test_exists_vector_infeasible_exit_code(tmp_path, capsys):
    (tmp_path / "m.json").write_text(json.dumps([[1, 1]]))
    (tmp_path / "b.json").write_text(json.dumps([{"lower": "1", "upper": "2"}, {"lower": "-2", "upper": "-1"}]))
    code, out, _ = run(capsys, "exists-vector", "--matrix", str(tmp_path / "m.json"), "--intervals", str(tmp_path / "b.json"))
    assert code == 1
    assert "feasible: false" in out and "certificate: (1, -1)" in out


def test_crn_regions(files, capsys):
    _, out, _ = run(capsys, "crn", "closure", "--W", files["W"], "--Wt", files["Wt"])
    assert out.strip() == "closure: [{a > 0, a - c > 0, b > 0}]"
    _, out, _ = run(capsys, "crn", "uniqueness", "--W", files["W"], "--Wt", files["Wt"])
    assert out.strip() == "uniqueness: [{a >= 0, a - c >= 0, b >= 0}]"
    code, out, _ = run(capsys, "crn", "closure", "--W", files["W"], "--Wt", files["Wt"], "--at", "a=2,b=1,c=1")
    assert (code, out.strip()) == (0, "closure: true")


@pytest.mark.parametrize("a, verdict, code", [("1/2", "true", 0), ("3/2", "true", 0), ("1", "false", 1), ("2", "false", 1)])
def test_crn_nondegenerate(files, capsys, a, verdict, code):
    result = run(capsys, "crn", "nondegenerate", "--W", files["Wex"], "--Wt", files["Wtex"], "--at", f"a={a}")
    assert result[0] == code
    assert result[1].strip() == f"nondegenerate: {verdict}"


def test_crn_faces_and_uniqueness(files, capsys):
    for cmd in ("faces", "uniqueness"):
        code, out, _ = run(capsys, "crn", cmd, "--W", files["Wex"], "--Wt", files["Wtex"], "--at", "a=1/2")
        assert (code, out.strip()) == (0, f"{cmd}: true")


def test_crn_deficiency_and_check(files, capsys):
    _, out, _ = run(capsys, "crn", "deficiency", "--network", files["net"])
    assert out.splitlines() == ["deficiency: 0", "kinetic deficiency: 0", "weakly reversible: true"]
    code, out, _ = run(capsys, "crn", "check", "--network", files["net"], "--assume-positive", "a,b,c")
    assert code == 0
    assert out.splitlines()[0] == "robust unique existence: holds iff [{a - c > 0}]"
    code, out, _ = run(capsys, "crn", "check", "--network", files["net"], "--at", "a=1,b=1,c=1")
    assert code == 1 and "robust unique existence: fails" in out


def test_input_errors(files, capsys):
    code, _, err = run(capsys, "minors", "--matrix", files["M"] + ".missing")
    assert code == 2 and "no such file" in err
    code, _, err = run(capsys, "crn", "closure", "--W", files["W"], "--Wt", files["Wt"], "--at", "z=1")
    assert code == 2 and "undeclared" in err
    code, _, err = run(capsys, "cocircuits", "--matrix", files["Wt"], "--assume-positive", "q")
    assert code == 2


def test_parse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["elementary-vectors"])
    assert info.value.code == 2


def test_json_output_is_byte_stable(files):
    cmd = [sys.executable, "-m", "omkit.cli", "crn", "check", "--network", files["net"], "--output", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["robust_existence"]["region"] == [["a > 0", "a - c > 0", "b > 0"]]
