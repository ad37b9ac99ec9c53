import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from dpcyl.cli import main
from dpcyl.serialize import fixtures_dir


def fixture_path(name: str) -> str:
    return str(fixtures_dir() / f"{name}.json")


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decide_fixtures(capsys):
    code, out, err = run_cli(
        ["decide", fixture_path("d3-3a1-conjugate-triple"), fixture_path("d4-3a1-real-quadrics")],
        capsys,
    )
    assert code == 0
    assert out.count("no_cylinder") == 2


def test_decide_json_stream(capsys):
    code, out, err = run_cli(
        ["decide", "--json", fixture_path("d2-a5-a2-split-cusp"), fixture_path("d1-2d4")], capsys
    )
    assert code == 0
    records = [json.loads(line) for line in out.strip().splitlines()]
    assert [r["answer"] for r in records] == ["contains_cylinder", "no_cylinder"]
    assert all("trace" in r for r in records)


def test_decide_fibration(capsys):
    code, out, err = run_cli(
        ["decide-fibration", fixture_path("d4-3a1-real-quadrics")], capsys
    )
    assert code == 0
    assert "contains_cylinder" in out


def test_malformed_input_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"degree": 3, "roots": [["x"]]}')
    code, out, err = run_cli(["decide", str(bad)], capsys)
    assert code == 2
    assert "$.roots" in err


def test_decide_mixed_inputs_still_reports_good_ones(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    code, out, err = run_cli(["decide", str(bad), fixture_path("d1-2d4")], capsys)
    assert code == 2
    assert "no_cylinder" in out


def test_enumerate_lines(capsys):
    code, out, err = run_cli(["enumerate", "3", "lines"], capsys)
    assert code == 0
    body = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert len(body) == 27
    assert "27 lines" in out


def test_enumerate_roots(capsys):
    code, out, err = run_cli(["enumerate", "2", "roots"], capsys)
    assert code == 0
    assert "126 roots" in out


def test_enumerate_degree_eight_lines_empty(capsys):
    code, out, err = run_cli(["enumerate", "8", "lines"], capsys)
    assert code == 0
    assert "0 lines" in out


def test_enumerate_bad_degree(capsys):
    code, out, err = run_cli(["enumerate", "11", "roots"], capsys)
    assert code == 2


def test_classify(capsys):
    code, out, err = run_cli(["classify", "--json", fixture_path("d2-3a2")], capsys)
    assert code == 0
    record = json.loads(out)
    assert record["type"] == "3A2"
    assert record["rho_tilde"] == 5
    assert record["rho"] == 1
    assert record["points"]["A2.0"] == "A2^-"


def test_verify_single_check(capsys):
    code, out, err = run_cli(["verify", "chain-selfpairing-table"], capsys)
    assert code == 0
    assert "PASS" in out


def test_verify_unknown_check(capsys):
    with pytest.raises(KeyError):
        run_cli(["verify", "does-not-exist"], capsys)


def test_fixtures_flag_resolves_names(tmp_path, capsys):
    code, out, err = run_cli(
        ["decide", "--fixtures", str(fixtures_dir()), "d1-2d4.json"], capsys
    )
    assert code == 0
    assert "no_cylinder" in out


def test_tables_renders(capsys):
    code, out, err = run_cli(["tables"], capsys)
    assert code == 0
    assert "-20/9" in out  # the widest chain row
    assert "alpha" in out


def test_console_script_installed():
    exe = shutil.which("dpcyl")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run([exe, "--version"], capture_output=True, text=True)
    assert proc.returncode == 0
