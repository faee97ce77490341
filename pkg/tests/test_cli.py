import json
import subprocess
import sys

import pytest

from suspsplit.cli import COMMANDS, RunConfig, jsonable, main, run


def _run(tmp_path, *argv):
    out = tmp_path / "report.json"
    status = main([*argv, "--json", str(out)])
    return status, (json.loads(out.read_text()) if out.exists() else None)


def test_verify_splitting_on_s3(tmp_path, data_dir):
    status, rep = _run(tmp_path, "verify-splitting", "--group", str(data_dir / "s3.csv"), "--max-level", "3")
    assert status == 0 and rep["passed"]
    ids = [r["details"]["counting_identity_H0"] for r in rep["reports"] if r["check"] == "splitting"]
    assert "47 = 11 + 21 + 15" in ids


def test_homology_of_projective_plane(tmp_path, data_dir):
    status, rep = _run(tmp_path, "homology", "--complex", str(data_dir / "rp2.sc"))
    assert status == 0
    first = rep["reports"][0]
    assert first["check"] == "order_complex_homology"
    assert first["details"]["homology"]["1"]["group"] == "Z/2"


def test_missing_input_exits_one(tmp_path, capsys):
    assert main(["verify-splitting", "--complex", str(tmp_path / "missing.sc")]) == 1
    assert "missing.sc" in capsys.readouterr().err


def test_malformed_group_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("order,2\n0,1\n1,zero\n")
    assert main(["validate", "--group", str(bad)]) == 1
    assert f"{bad}:3:" in capsys.readouterr().err


def test_conflicting_inputs_exit_one(tmp_path, data_dir):
    assert main(["validate", "--group", str(data_dir / "z2.csv"), "--cech-circle"]) == 1


def test_failure_exits_two(tmp_path, monkeypatch):
    from suspsplit import cli
    from suspsplit.reports import Report

    monkeypatch.setitem(cli.HANDLERS, "validate", lambda cfg, sp: [Report("forced", violations=[1]).to_dict()])
    status, rep = _run(tmp_path, "validate", "--builtin", "hom_z2")
    assert status == 2 and not rep["passed"] and rep["summary"]["failed"] == 1


@pytest.mark.parametrize("command", COMMANDS)
def test_every_command_passes_on_a_builtin(tmp_path, command):
    status, rep = _run(tmp_path, command, "--builtin", "rep_s3", "--max-level", "3")
    assert status == 0, [r for r in rep["reports"] if not r["passed"]]
    assert rep["config"]["command"] == command
    assert all({"check", "params", "passed", "details"} <= set(r) for r in rep["reports"])


def test_reports_are_byte_identical(tmp_path, monkeypatch, data_dir):
    texts = []
    for threads in ("1", "3"):
        monkeypatch.setenv("SUSPSPLIT_THREADS", threads)
        out = tmp_path / f"r{threads}.json"
        main(["filtration", "--max-level", "3", "--json", str(out)])
        texts.append(out.read_bytes())
    assert texts[0] == texts[1]


def test_bad_thread_setting(monkeypatch):
    monkeypatch.setenv("SUSPSPLIT_THREADS", "many")
    assert main(["validate", "--builtin", "hom_z2"]) == 1


def test_cech_circle_flag():
    status, rep = run(RunConfig("verify-realization", cech_circle=True, max_level=2, max_dim=3))
    assert status == 0 and rep["reports"][0]["params"]["input"] == "cech_circle"


def test_rep_flag(data_dir):
    status, rep = run(RunConfig("homology", group=data_dir / "s3.csv", rep=True, max_level=2))
    assert status == 0 and rep["reports"][0]["params"]["input"] == "rep_s3"


def test_seed_changes_only_the_trials():
    a = run(RunConfig("validate", builtin="hom_z2", max_level=2, seed=1))[1]
    b = run(RunConfig("validate", builtin="hom_z2", max_level=2, seed=1))[1]
    c = run(RunConfig("validate", builtin="hom_z2", max_level=2, seed=2))[1]
    assert a == b and a["reports"][:-1] == c["reports"][:-1]


def test_jsonable():
    assert jsonable({(1, 2): frozenset({3, 1}), "x": (None, True)}) == {"1,2": [1, 3], "x": [None, True]}


def test_module_entry_point(tmp_path, data_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "suspsplit", "homology", "--complex", str(data_dir / "sphere2.sc")],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    rep = json.loads(proc.stdout)
    assert rep["reports"][0]["details"]["homology"]["2"]["group"] == "Z"
