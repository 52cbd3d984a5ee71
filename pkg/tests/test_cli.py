import json
import subprocess
import sys

import pytest

from betadic.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def report(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, (out, err)
    data = json.loads(out)
    assert data["command"] == argv[0]
    return data


def test_expand(capsys):
    data = report(capsys, "expand", "--min-poly", "1,0,1", "--x", "0,1", "--beta", "1,1", "--m", "4")
    assert data["result"]["digit_indices"] == [1, 1, 1, 1]
    assert data["config"] == {"min_poly": [1, 0, 1], "x": [0, 1], "beta": [1, 1], "m": 4}


def test_expand_with_digit_override(capsys):
    data = report(capsys, "expand", "--x", "5", "--beta", "3", "--m", "3", "--digits", "[[0],[1],[-1]]")
    assert [d["coords"] if isinstance(d, dict) else d for d in data["result"]["digits"]]


def test_factor(capsys):
    data = report(capsys, "factor", "--min-poly", "1,0,1", "--beta", "3,1")
    assert sorted(f["p"] for f in data["result"]["factors"]) == ["2", "5"]
    data = report(capsys, "factor", "--min-poly", "1,0,1", "--p", "5")
    assert len(data["result"]["factors"]) == 2


def test_order_and_kernel(capsys):
    data = report(capsys, "order", "--alpha", "2", "--p", "5", "--k", "3")
    assert data["result"] == {"order": "100", "unit_group_size": "100"}
    data = report(capsys, "kernel", "--alpha", "2", "--p", "1093", "--rmax", "5", "--r", "2")
    assert data["result"]["size"] == "1"
    data = report(capsys, "kernel", "--alpha", "2", "--p", "3", "--rmax", "6")
    assert data["result"]["pattern_ok"] is True
    assert [k["size"] for k in data["result"]["kernels"]] == ["3"] * 5


def test_pattern(capsys):
    data = report(capsys, "pattern", "--min-poly", "0,1", "--alpha", "2", "--p", "1093", "--rmax", "10")
    assert data["result"]["v"] == 2
    data = report(capsys, "pattern", "--min-poly", "1,0,1", "--alpha", "2,1", "--p", "2", "--rmax", "20")
    assert (data["result"]["e"], data["result"]["v"]) == (2, 7)


def test_freq_and_complexity(capsys):
    data = report(capsys, "freq", "--alpha", "2", "--beta", "3", "--m", "3")
    assert data["result"]["h_m"] == "18"
    data = report(capsys, "complexity", "--min-poly", "1,0,1", "--alpha", "2,1", "--beta", "1,1", "--m-max", "6")
    assert data["result"]["limit_exact"] == "1/2"


def test_erdos_json_and_csv(capsys):
    data = report(capsys, "erdos", "--N", "100")
    assert data["result"]["M_N"] == 2 and data["result"]["hits"] == [2, 8]
    code, out, _ = run_cli(capsys, "erdos", "--N", "5", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "N,M_N,bound" and len(out.splitlines()) == 6


def test_dw(capsys):
    data = report(capsys, "dw", "--p", "2", "--q", "3", "--m", "3")
    assert [a["l_m"] for a in data["result"]["averages"]] == ["2", "6", "18"]
    code, out, _ = run_cli(capsys, "dw", "--p", "2", "--q", "3", "--m", "2", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 1 + 2 * 3


def test_config_file_and_flag_override(capsys, tmp_path):
    cfg = tmp_path / "job.json"
    cfg.write_text(json.dumps({"min_poly": [1, 0, 1], "x": [0, 1], "beta": [1, 1], "m": 2}))
    data = report(capsys, "expand", "--config", str(cfg))
    assert data["result"]["digit_indices"] == [1, 1]
    data = report(capsys, "expand", "--config", str(cfg), "--m", "4")
    assert data["config"]["m"] == 4
    assert data["result"]["digit_indices"] == [1, 1, 1, 1]


def test_out_file_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["pattern", "--min-poly", "-2,0,1", "--alpha", "3,1", "--p", "2", "--rmax", "12", "--seed", "7"]
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["config"]["seed"] == 7


def test_math_errors_exit_2(capsys):
    code, out, _ = run_cli(capsys, "pattern", "--min-poly", "1,0,1", "--alpha", "0,1", "--p", "5", "--rmax", "5")
    assert code == 2
    assert json.loads(out)["error"] == "RootOfUnity"
    code, out, _ = run_cli(capsys, "freq", "--alpha", "6", "--beta", "3", "--m", "2")
    assert code == 2 and json.loads(out)["error"] == "NotCoprime"
    code, out, _ = run_cli(capsys, "freq", "--alpha", "2", "--beta", "3", "--m", "9", "--budget", "100")
    assert code == 2 and json.loads(out)["error"] == "WorkBudgetExceeded"
    code, out, _ = run_cli(capsys, "expand", "--min-poly", "-1,0,1", "--x", "1", "--beta", "2", "--m", "1")
    assert code == 2 and json.loads(out)["error"] == "Reducible"


def test_config_errors_exit_1(capsys, tmp_path):
    code, _, err = run_cli(capsys, "expand", "--x", "1", "--beta", "3")
    assert code == 1 and json.loads(err)["field"] == "m"
    code, _, err = run_cli(capsys, "expand", "--x", "1", "--beta", "3", "--m", "two")
    assert code == 1 and json.loads(err)["field"] == "m"
    code, _, err = run_cli(capsys, "expand", "--config", str(tmp_path / "missing.json"))
    assert code == 1 and json.loads(err)["field"] == "config"
    code, _, err = run_cli(capsys, "order", "--alpha", "2", "--p", "5", "--k", "2", "--prime-index", "3")
    assert code == 1 and json.loads(err)["field"] == "prime_index"
    code, _, err = run_cli(capsys, "expand", "--x", "1", "--beta", "3", "--m", "2", "--format", "csv")
    assert code == 1 and json.loads(err)["field"] == "format"
    code, _, err = run_cli(capsys, "expand", "--bogus", "1")
    assert code == 1 and json.loads(err)["field"] == "arguments"
    code, _, err = run_cli(capsys, "nosuchcommand")
    assert code == 1


def test_negative_values_accepted(capsys):
    data = report(capsys, "expand", "--min-poly", "-2,0,1", "--x", "-7,3", "--beta", "1,2", "--m", "3")
    assert data["config"]["x"] == [-7, 3]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "betadic", "erdos", "--N", "20"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["hits"] == [2, 8]


def test_progress_goes_to_stderr(capsys):
    code, out, err = run_cli(capsys, "freq", "--alpha", "2", "--beta", "3", "--m", "11")
    assert code == 0
    assert "orbit step 100000/" in err
    assert "orbit step" not in out
