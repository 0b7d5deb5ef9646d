"""End-to-end tests of the dlbf command-line tool (path in $DLBF_CLI)."""

import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ.get("DLBF_CLI", "dlbf")

AGGREGATE_HEADER = (
    "m,r,k,n,trials,probes,master_seed,mean_deletable,std_deletable,ci95_deletable,"
    "mean_bits_reset,mean_fpr_before,ci95_fpr_before,mean_fpr_after,ci95_fpr_after,"
    "mean_bitmap_saturation"
)
MODEL_HEADER = "m,r,k,n,density,p0,p1,pc,pd,fpr_dlbf,fpr_sbf"


def run(*args, check=True, env=None):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, env=env)
    if check:
        assert proc.returncode == 0, proc.stderr
    return proc


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_model_point():
    out = run("model", "--m", "240", "--r", "24", "--k", "5", "--n", "22").stdout
    assert out.splitlines()[0] == MODEL_HEADER
    (row,) = rows(out)
    assert abs(float(row["pd"]) - 0.933) < 0.001
    assert abs(float(row["fpr_dlbf"]) - 0.0102) < 0.0001


def test_model_empty_filter():
    (row,) = rows(run("model", "--m", "240", "--r", "24", "--k", "5", "--n", "0").stdout)
    assert float(row["pd"]) == 1.0
    assert float(row["fpr_dlbf"]) == 0.0
    assert row["density"] == ""


def test_model_rejects_r_ge_m():
    proc = run("model", "--m", "240", "--r", "300", "--k", "5", check=False)
    assert proc.returncode != 0
    assert "--r" in proc.stderr


def test_model_range_and_json():
    out = run("model", "--n-range", "1:10:3", "--format", "json").stdout
    data = json.loads(out)
    assert [d["n"] for d in data] == [1, 4, 7, 10]


def test_model_sweep():
    out = run("model", "--ratios", "10", "20", "--densities", "8", "16", "24").stdout
    assert len(rows(out)) == 6


def test_unknown_flag_rejected():
    assert run("model", "--bogus", "1", check=False).returncode != 0


def test_small_r_warns():
    proc = run("model", "--m", "240", "--r", "3", "--k", "5")
    assert "warning" in proc.stderr


def test_simulate_paper_configuration():
    args = ["simulate", "--m", "240", "--r", "24", "--k", "5", "--n", "22",
            "--trials", "2000", "--probes", "500", "--seed", "42"]
    first = run(*args).stdout
    assert first.splitlines()[0] == AGGREGATE_HEADER
    (row,) = rows(first)
    assert abs(float(row["mean_deletable"]) - 0.80) <= 0.05
    assert abs(float(row["mean_bits_reset"]) - 0.40) <= 0.10
    assert run(*args).stdout == first


def test_simulate_seed_from_environment():
    env = dict(os.environ, DLBF_SEED="7")
    via_env = run("simulate", "--trials", "50", env=env).stdout
    via_flag = run("simulate", "--trials", "50", "--seed", "7").stdout
    assert via_env == via_flag
    assert rows(via_env)[0]["master_seed"] == "7"


def test_simulate_baseline_row():
    out = rows(run("simulate", "--trials", "100", "--baseline", "sbf").stdout)
    assert [r["r"] for r in out] == ["24", "0"]
    assert float(out[1]["mean_fpr_before"]) <= float(out[0]["mean_fpr_before"])


def test_simulate_rejects_zero_trials():
    assert run("simulate", "--trials", "0", check=False).returncode != 0


def test_simulate_wordlist(tmp_path):
    words = tmp_path / "words.txt"
    words.write_text("\n".join(f"word{i}" for i in range(1000)) + "\n")
    (row,) = rows(run("simulate", "--trials", "20", "--wordlist", str(words)).stdout)
    assert int(row["trials"]) == 20
    short = tmp_path / "short.txt"
    short.write_text("a\nb\n")
    assert run("simulate", "--wordlist", str(short), check=False).returncode != 0


def test_figure_fig2():
    out = run("figure", "--id", "fig2").stdout
    assert out.splitlines()[0] == MODEL_HEADER
    assert len(rows(out)) == 5 * 31


def test_figure_fig3_decreasing_in_n():
    out = rows(run("figure", "--id", "fig3", "--trials", "200", "--seed", "7").stdout)
    by_r = {}
    for row in out:
        by_r.setdefault(row["r"], []).append((int(row["n"]), float(row["mean_deletable"])))
    assert sorted(by_r) == ["12", "120", "24", "60"]
    for series in by_r.values():
        values = [v for _, v in sorted(series)]
        # Near-saturated small-n points may tie within noise; the trend must hold
        # from start to finish and step-wise beyond the noise floor.
        assert values[0] > values[-1]
        for a, b in zip(values, values[1:]):
            assert b <= a + 0.02


def test_figure_fig4_columns(tmp_path):
    target = tmp_path / "fig4.csv"
    run("figure", "--id", "fig4", "--trials", "200", "--out", str(target))
    header = target.read_text().splitlines()[0].split(",")
    assert {"mean_fpr_before", "mean_fpr_after", "mean_fpr_sbf"} <= set(header)


def test_figure_unknown_id():
    proc = run("figure", "--id", "fig9", check=False)
    assert proc.returncode != 0
    assert "fig2, fig3, fig4" in proc.stderr


def test_filter_lifecycle(tmp_path):
    path = str(tmp_path / "f.dlbf")
    run("filter", "create", "--file", path, "--m", "240", "--r", "24", "--k", "5", "--seed", "42")
    assert os.path.getsize(path) == 26 + 3 + 27
    assert run("filter", "query", "--file", path, "x").stdout.strip() == "false"
    run("filter", "insert", "--file", path, "x")
    assert run("filter", "query", "--file", path, "x").stdout.strip() == "true"
    assert run("filter", "remove", "--file", path, "x").stdout.strip() == "Deleted"
    assert run("filter", "query", "--file", path, "x").stdout.strip() == "false"
    assert run("filter", "remove", "--file", path, "x").stdout.strip() == "NotPresent"


def test_filter_errors_leave_file_untouched(tmp_path):
    path = tmp_path / "f.dlbf"
    run("filter", "create", "--file", str(path))
    run("filter", "insert", "--file", str(path), "x")
    before = path.read_bytes()
    assert run("filter", "insert", "--file", str(path), "--m", "256", "y", check=False).returncode != 0
    assert path.read_bytes() == before
    assert run("filter", "create", "--file", str(path), check=False).returncode != 0
    assert path.read_bytes() == before

    corrupt = tmp_path / "bad.dlbf"
    corrupt.write_bytes(b"XLBF" + before[4:])
    proc = run("filter", "insert", "--file", str(corrupt), "x", check=False)
    assert proc.returncode != 0
    assert "bad magic" in proc.stderr
    assert corrupt.read_bytes() == b"XLBF" + before[4:]

    assert run("filter", "query", "--file", str(tmp_path / "missing"), "x", check=False).returncode != 0
