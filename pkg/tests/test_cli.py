import io
import json
import subprocess
import sys

import pytest

from qsheets import cli
from qsheets.suite import Check


def run(*argv):
    buf = io.StringIO()
    report, code = cli.run(list(argv), stdout=buf)
    return report, code, buf.getvalue()


def strip_time(report):
    return {k: v for k, v in report.items() if k != "wall_time"}


def test_sheets_rank_two():
    report, code, out = run("sheets", "--rank", "2")
    assert code == 0
    assert report["result"]["count"] == 3
    assert "3 sheets" in out


def test_induce_subregular():
    report, code, _ = run("induce", "--rank", "3", "--levi", "2,1", "--unipotent", "trivial")
    assert code == 0
    assert report["result"]["partition"] == [2, 1] and report["result"]["dim"] == 4


def test_ledger_and_jordan():
    report, code, _ = run("ledger", "--rank", "5", "--class", "a:111;b:11")
    assert code == 0
    assert report["result"]["classes"][0]["evidence"] == "LEVI_A1A2_COR"
    report, code, _ = run("jordan", "--rank", "2", "--class", "1:2")
    assert code == 0


def test_roots_and_algebra():
    report, code, _ = run("roots", "--type", "A", "--rank", "2", "--levi", "1")
    assert code == 0
    report, code, _ = run("algebra", "--rank", "2")
    assert code == 0 and all(c["status"] == "PASS" for c in report["checks"])


def test_module_commands():
    for argv in (["induce-module", "--rank", "2", "--levi", "1"],
                 ["dckp", "--rank", "1"],
                 ["bijection-demo", "--rank", "1"],
                 ["gio-probe", "--f", "1", "--k", "1"],
                 ["gio-probe", "--f", "0", "--k", "1"]):
        report, code, _ = run(*argv)
        assert code == 0, argv
        assert report["checks"], argv


def test_verify_all_passes():
    report, code, out = run("verify-all", "--ell", "3", "--max-rank", "3")
    assert code == 0
    assert out.count("PASS") >= 7
    assert all(c["status"] == "PASS" for c in report["checks"])


@pytest.mark.parametrize("argv", [
    ["sheets"],
    ["sheets", "--rank", "2", "--ell", "4"],
    ["nonsense"],
    ["sheets", "--rank", "x"],
    ["ledger", "--rank", "3", "--class", "1:21 2:1"],
    ["sheets", "--rank", "2", "--threads", "0"],
])
def test_usage_errors_exit_two(argv, capsys):
    _, code, _ = run(*argv)
    assert code == 2


def test_check_failure_exits_one(monkeypatch):
    def failing(opts):
        return {}, [Check("forced", "FAIL", 1, 2)], []

    monkeypatch.setitem(cli.COMMANDS, "sheets", failing)
    report, code, out = run("sheets", "--rank", "2")
    assert code == 1
    assert report["checks"][0]["status"] == "FAIL"
    assert "FAIL" in out


def test_report_schema_and_determinism(tmp_path):
    a, _, text = run("induce-module", "--rank", "2", "--levi", "1", "--json")
    b, _, _ = run("induce-module", "--rank", "2", "--levi", "1", "--json")
    assert set(a) == {"command", "argv", "parameters", "checks", "result", "wall_time"}
    for c in a["checks"]:
        assert set(c) == {"name", "status", "expected", "actual", "anchor"}
    assert [c["name"] for c in a["checks"]] == sorted(c["name"] for c in a["checks"])
    dump = lambda r: json.dumps(strip_time(r), indent=2, sort_keys=True)
    assert dump(a) == dump(b)
    assert json.loads(text)["command"] == "induce-module"


def test_verify_all_is_independent_of_threads(monkeypatch):
    one, _, _ = run("verify-all", "--threads", "1")
    monkeypatch.setenv(cli.THREADS_ENV, "3")
    three, _, _ = run("verify-all")
    assert one["checks"] == three["checks"]
    assert one["result"] == three["result"]


def test_output_file_and_config(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"rank": 3}))
    out = tmp_path / "report.json"
    report, code, _ = run("sheets", "--config", str(cfg), "--output", str(out))
    assert code == 0 and report["result"]["count"] == 5
    assert strip_time(json.loads(out.read_text())) == strip_time(report)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"colour": 1}))
    _, code, _ = run("sheets", "--config", str(bad))
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qsheets", "sheets", "--rank", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "3 sheets" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "qsheets", "sheets", "--rank", "2", "--ell", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
