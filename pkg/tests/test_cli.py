import json

import pytest

from aeaqecc.cli import main
from aeaqecc.tables import golden_lines


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.delenv("AEAQECC_BUDGET", raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_code(path, field, n, rows):
    lines = [f"field {field}", f"n {n}", f"k {len(rows)}"]
    lines += ["row " + " ".join(str(v) for v in r) for r in rows]
    path.write_text("\n".join(lines) + "\n")
    return str(path)


def test_gv_threshold_example(capsys):
    code, out, err = run(capsys, "gv-threshold", "--q", "4", "--n", "15",
                         "--k1", "3", "--k2", "1", "--c", "1")
    assert code == 0
    assert out == "(2,1)\n"
    assert err == ""


def test_gv_threshold_json(capsys):
    code, out, _ = run(capsys, "gv-threshold", "--format", "json", "--q", "4",
                       "--n", "15", "--k1", "3", "--k2", "1", "--c", "1")
    assert code == 0
    assert json.loads(out) == {"dz_threshold": 2, "dx_threshold": 1}


def test_gv_check_holds_at_threshold(capsys):
    base = ["gv-check", "--q", "4", "--n", "15", "--k1", "3", "--k2", "1",
            "--c", "1"]
    code, out, _ = run(capsys, *base, "--dz", "2", "--dx", "1")
    assert code == 0
    assert "holds = true" in out
    code, out, _ = run(capsys, *base, "--dz", "3", "--dx", "2")
    assert code == 0
    assert "holds = false" in out
    assert "sum = " in out


def test_gv_check_rejects_bad_shape(capsys):
    code, _, err = run(capsys, "gv-check", "--q", "4", "--n", "15", "--k1", "3",
                       "--k2", "1", "--c", "2", "--dz", "2", "--dx", "1")
    assert code == 2
    assert err != ""


def test_analyze_css_pair(capsys, tmp_path):
    a = write_code(tmp_path / "a.code", 2, 3, [[1, 1, 1]])
    b = write_code(tmp_path / "b.code", 2, 3, [[1, 0, 1]])
    code, out, _ = run(capsys, "analyze", a, b)
    assert code == 0
    assert out.splitlines()[0] == "[[3, 1, 2/1; 0]]_2"
    assert "c = 0" in out
    assert "CSS-compatible pair" in out
    assert "exceeds finite GV = false" in out


def test_analyze_parse_error_has_location(capsys, tmp_path):
    bad = tmp_path / "bad.code"
    bad.write_text("field 2\nn 3\nk 1\nrow 1 2 1\n")
    good = write_code(tmp_path / "b.code", 2, 3, [[1, 0, 1]])
    code, out, err = run(capsys, "analyze", str(bad), good)
    assert code == 3
    assert "line 4" in err
    assert out == ""


def test_analyze_missing_file(capsys, tmp_path):
    good = write_code(tmp_path / "b.code", 2, 3, [[1, 0, 1]])
    code, _, err = run(capsys, "analyze", str(tmp_path / "nope.code"), good)
    assert code == 3
    assert err != ""


def test_analyze_mismatched_fields(capsys, tmp_path):
    a = write_code(tmp_path / "a.code", 2, 3, [[1, 1, 1]])
    b = write_code(tmp_path / "b.code", 4, 3, [[1, 0, 1]])
    code, _, err = run(capsys, "analyze", a, b)
    assert code == 3
    assert err != ""


def test_analyze_bound_only_under_small_budget(capsys, tmp_path):
    a = write_code(tmp_path / "a.code", 2, 12, [[1] * 12])
    code, out, _ = run(capsys, "analyze", a, a, "--budget", "1024")
    assert code == 0
    assert out.splitlines()[0] == "[[12, 10, >=1/>=1; 0]]_2"
    assert "not evaluated (bound-only distances)" in out


def test_analyze_env_budget_and_flag_override(capsys, tmp_path, monkeypatch):
    a = write_code(tmp_path / "a.code", 2, 12, [[1] * 12])
    monkeypatch.setenv("AEAQECC_BUDGET", "1024")
    code, out, _ = run(capsys, "analyze", a, a)
    assert code == 0
    assert ">=1" in out.splitlines()[0]
    code, out, _ = run(capsys, "analyze", a, a, "--budget", str(1 << 20))
    assert code == 0
    assert out.splitlines()[0] == "[[12, 10, 2/2; 0]]_2"


def test_bad_env_budget(capsys, tmp_path, monkeypatch):
    a = write_code(tmp_path / "a.code", 2, 3, [[1, 1, 1]])
    monkeypatch.setenv("AEAQECC_BUDGET", "plenty")
    code, _, err = run(capsys, "analyze", a, a)
    assert code == 2
    assert "AEAQECC_BUDGET" in err


def test_budget_floor(capsys):
    code, _, err = run(capsys, "tables", "--budget", "8")
    assert code == 2
    assert "1024" in err


def test_csv_limited_to_tables(capsys):
    code, _, err = run(capsys, "gv-check", "--format", "csv", "--q", "4",
                       "--n", "15", "--k1", "3", "--k2", "1", "--c", "1",
                       "--dz", "2", "--dx", "1")
    assert code == 2
    assert "csv" in err


def test_tables_csv_matches_golden(capsys):
    code, out, err = run(capsys, "tables", "--which", "1", "--format", "csv")
    assert code == 0
    assert err == ""
    assert out.splitlines() == golden_lines(1)


def test_tables_json(capsys):
    code, out, _ = run(capsys, "tables", "--which", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["mismatches"] == []
    assert len(doc["table2"]) == 34
    assert doc["table2"][0]["c"] == 11


def test_tables_mismatch_under_reduced_budget(capsys):
    # exact cells in the golden cannot be reproduced without enumeration
    code, _, err = run(capsys, "tables", "--which", "1", "--budget", "1024")
    assert code == 1
    assert "golden has" in err


def test_bch_construct_by_indices(capsys):
    code, out, _ = run(capsys, "bch-construct", "--q", "5", "--n", "24",
                       "--s", "1", "--t", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "[[24, 19, >=4/>=3; 3]]_5"
    assert lines[1] == "delta1 = 0 1 2 5 10"
    assert lines[2] == "delta2 = 0 19 23"
    assert lines[3] == "dz bound = 4"
    assert lines[4] == "dx bound = 3"


def test_bch_construct_by_labels(capsys):
    code, out, _ = run(capsys, "bch-construct", "--q", "2", "--n", "15",
                       "--labels1", "0 1 3 7", "--labels2", "0,1,3,7")
    assert code == 0
    assert out.splitlines()[0] == "[[15, 2, 10/10; 13]]_2"


def test_bch_construct_usage_errors(capsys):
    code, _, err = run(capsys, "bch-construct", "--q", "2", "--n", "15")
    assert code == 2 and "either" in err
    code, _, err = run(capsys, "bch-construct", "--q", "2", "--n", "15",
                       "--s", "0", "--labels1", "0")
    assert code == 2
    code, _, err = run(capsys, "bch-construct", "--q", "2", "--n", "15",
                       "--labels1", "0 x", "--labels2", "0")
    assert code == 2 and "integers" in err
    code, _, err = run(capsys, "bch-construct", "--q", "2", "--n", "15",
                       "--s", "3", "--t", "1")
    assert code == 2


def test_enlarge_demo_human(capsys):
    code, out, _ = run(capsys, "enlarge-demo", "--q", "7")
    assert code == 0
    assert out == "before = [[6, 3, 2/3; 0]]_7\nafter  = [[6, 3, 3/3; 1]]_7\n"


def test_enlarge_demo_json(capsys):
    code, out, _ = run(capsys, "enlarge-demo", "--q", "8", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["before"]["dz"]["value"] == 2
    assert doc["after"]["dz"]["value"] == 3
    assert doc["after"]["dz"]["exact"] is True
    assert doc["before"]["dx"] == doc["after"]["dx"]
    assert doc["before"]["k"] == doc["after"]["k"] == 4


def test_enlarge_demo_rejections(capsys):
    code, _, err = run(capsys, "enlarge-demo", "--q", "4")
    assert code == 2 and err != ""
    code, _, err = run(capsys, "enlarge-demo", "--q", "6")
    assert code == 2
    code, _, err = run(capsys, "enlarge-demo", "--q", "3")
    assert code == 2
    code, _, err = run(capsys, "enlarge-demo", "--q", "7", "--budget", "2048")
    assert code == 2 and "budget" in err


def test_unknown_command_is_usage_error(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys)[0] == 2


def test_output_is_deterministic(capsys):
    args = ("gv-check", "--q", "9", "--n", "40", "--k1", "10", "--k2", "5",
            "--c", "5", "--dz", "7", "--dx", "4")
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second
