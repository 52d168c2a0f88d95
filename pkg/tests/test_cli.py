import json

import pytest

from privwords.cli import (
    RunConfig,
    UsageError,
    analyze_word,
    cmd_analyze,
    cmd_profile,
    cmd_scan_gaps,
    cmd_tm_table,
    main,
    profile_from_csv,
    profile_from_json,
    profile_to_csv,
    profile_to_json,
    verify_word,
    zero_runs,
)
from privwords.privileged import ComplexityProfile


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_word_report():
    rep = analyze_word("0120")
    assert rep.pri_count == 5 and rep.law_ok
    assert not rep.is_rich and not rep.pri_equals_pal
    assert rep.is_c_poor


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--word", "0110", "--format", "json")
    assert code == 0
    (row,) = json.loads(out)
    assert row["word"] == "0110" and row["is_rich"] and row["pal_count"] == 5


def test_analyze_empty_word(capsys):
    code, _, err = run(capsys, "analyze", "--word", "EPS")
    assert code == 2 and "allow-empty" in err
    code, out, _ = run(capsys, "analyze", "--word", "EPS", "--allow-empty", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1].startswith("EPS,0,1,1,1,True,True,True,True")


def test_analyze_file_and_workers(tmp_path, capsys):
    f = tmp_path / "words.txt"
    f.write_text("0\n01\n0120\n\n001\n")
    code, out, _ = run(capsys, "analyze", "--file", str(f), "--workers", "2", "--format", "json")
    assert code == 0
    assert [r["word"] for r in json.loads(out)] == ["0", "01", "0120", "001"]
    assert cmd_analyze(["01", "10"], workers=2) == cmd_analyze(["01", "10"])


def test_verify(tmp_path, capsys):
    f = tmp_path / "w.txt"
    f.write_text("\n".join(["0120", "010011", "abcab"]))
    code, out, _ = run(capsys, "verify", "--file", str(f))
    assert code == 0 and "3/3 words pass" in out
    assert verify_word("0110100110010110") == []


def test_verify_reports_violations(monkeypatch, capsys):
    monkeypatch.setattr("privwords.cli.verify_word", lambda w: ["broken"])
    code, out, _ = run(capsys, "verify", "--word", "01")
    assert code == 1 and "01: broken" in out


def test_profile_source_table(capsys):
    code, out, _ = run(capsys, "profile", "--source", "fibonacci", "--nmax", "10", "--cushion", "8")
    assert code == 0
    lines = out.splitlines()
    assert "exact up to n=10" in lines[0]
    assert [int(l.split()[1]) for l in lines[2:]] == [1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1]


def test_profile_word_and_factor(capsys):
    code, out, _ = run(capsys, "profile", "--word", "0120", "--nmax", "4", "--format", "json")
    assert code == 0 and json.loads(out)["counts"] == [1, 3, 0, 0, 1]
    code, out, _ = run(capsys, "profile", "--source", "tm", "--nmax", "4", "--property", "factor",
                       "--format", "json", "--cushion", "8")
    assert json.loads(out)["counts"] == [1, 2, 4, 6, 10]


def test_profile_out_file(tmp_path, capsys):
    target = tmp_path / "p.csv"
    code, out, _ = run(capsys, "profile", "--source", "tm", "--nmax", "20", "--format", "csv",
                       "--out", str(target), "--cushion", "8")
    assert code == 0 and out == ""
    prof = profile_from_csv(target.read_text())
    assert prof.counts == cmd_profile("tm", 20, cushion=8).counts


@pytest.mark.parametrize("argv", [
    ["profile", "--source", "square", "--nmax", "5"],
    ["profile", "--nmax", "5"],
    ["profile", "--word", "01", "--source", "tm", "--nmax", "5"],
    ["profile", "--word", "01", "--nmax", "5"],
    ["profile", "--source", "tm", "--nmax", "5", "--cushion", "0"],
    ["profile", "--source", "tm", "--nmax", "-1"],
    ["tm-table", "--nmax", "7"],
    ["scan-gaps", "--to", "3", "--from", "5"],
    ["analyze"],
    ["analyze", "--file", "/nonexistent/words.txt"],
    ["frobnicate"],
    ["profile", "--source", "tm", "--nmax", "5", "--format", "xml"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_tm_table(capsys):
    table = cmd_tm_table(20, cushion=16)
    assert table == {2: 2, 4: 2, 6: 4, 8: 8, 10: 8, 12: 4, 14: 0, 16: 0, 18: 2, 20: 2}
    code, out, _ = run(capsys, "tm-table", "--nmax", "20", "--format", "json", "--cushion", "16")
    assert code == 0 and json.loads(out)["14"] == 0


def test_scan_gaps(capsys):
    assert cmd_scan_gaps("tm", 80, 100) == [(81, 85)] + [(n, n) for n in range(87, 100, 2)]
    code, out, _ = run(capsys, "scan-gaps", "--source", "fibonacci", "--from", "1", "--to", "50")
    assert code == 0 and out == "no zero runs\n"
    code, out, _ = run(capsys, "scan-gaps", "--from", "48", "--to", "66", "--format", "csv")
    assert "50,66" not in out and out.splitlines()[0] == "start,end"


def test_zero_runs():
    p = ComplexityProfile((1, 0, 0, 2, 0, 1, 0, 0))
    assert zero_runs(p, 0, 7) == [(1, 2), (4, 4), (6, 7)]
    assert zero_runs(p, 3, 3) == []


def test_serialisation_round_trip():
    p = ComplexityProfile((1, 2, 1, 2, 0), "privileged", valid_to=2,
                          exact=(True, True, True, False, False), name="x")
    assert profile_from_json(profile_to_json(p)) == p
    q = profile_from_csv(profile_to_csv(p), kind="privileged", name="x")
    assert q == p
    with pytest.raises(ValueError):
        profile_from_csv("n,count,exact\n1,2,1\n")


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig(fmt="yaml")
    assert RunConfig(n_max=3).cushion > 0


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0 and "tm-table" in out
