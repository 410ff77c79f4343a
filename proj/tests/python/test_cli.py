import json
import os
import subprocess

import pytest

import pmad

CLI = os.environ.get("PMAD_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="PMAD_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


@pytest.fixture
def data_file(tmp_path):
    xs = pmad.sample(pmad.Params(1.0, 1.0), 200, 17)
    path = tmp_path / "data.txt"
    path.write_text("\n".join(repr(x) for x in xs) + "\n")
    return path


def test_fit_writes_reports(data_file, tmp_path):
    out = tmp_path / "fit"
    r = run("fit", "--input", str(data_file), "--bayes", "--out", str(out))
    assert r.returncode == 0, r.stderr
    report = json.loads((out / "report.json").read_text())
    assert report["data"]["n"] == 200
    assert report["manifest"]["command"] == "fit"
    fit = report["pmad"]
    assert fit["ci_alpha"]["lower"] <= 1.0 <= fit["ci_alpha"]["upper"]
    assert fit["ci_beta"]["lower"] <= 1.0 <= fit["ci_beta"]["upper"]
    assert report["bayes"] is not None
    for m in report["models"]:
        assert m["aic"] == 2 * m["k"] + 2 * m["neg_loglik"]
    assert (out / "ecdf.csv").read_text().startswith("x,empirical_F,fitted_F")
    assert len((out / "qq.csv").read_text().splitlines()) == 201


def test_gof_two_rows(data_file, tmp_path):
    out = tmp_path / "gof"
    r = run("gof", "--input", str(data_file), "--out", str(out))
    assert r.returncode == 0, r.stderr
    lines = (out / "gof.csv").read_text().splitlines()
    assert len(lines) == 3
    # Data drawn at beta = 1 is Maxwell, so the one-parameter model ranks first.
    assert [line.split(",")[0] for line in lines[1:]] == ["MaD", "PMaD"]


def test_properties_and_simulate(tmp_path):
    r = run("properties", "--alpha", "1", "--beta", "1", "--out", str(tmp_path / "p"))
    assert r.returncode == 0, r.stderr
    assert json.loads(r.stdout)["mode"] == 1.0
    r = run("simulate", "--alpha", "0.75", "--beta", "0.75", "--n", "10", "--n", "30",
            "--reps", "100", "--seed", "5", "--out", str(tmp_path / "s"))
    assert r.returncode == 0, r.stderr
    assert len((tmp_path / "s" / "table2.csv").read_text().splitlines()) == 5
    assert len((tmp_path / "s" / "table3.csv").read_text().splitlines()) == 3


def test_exit_codes(tmp_path):
    r = run("fit", "--input", str(tmp_path / "missing.txt"), "--out", str(tmp_path))
    assert r.returncode == 2
    assert json.loads(r.stderr.strip().splitlines()[-1])["error"]["kind"] == "io"

    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\n-3\n")
    r = run("fit", "--input", str(bad), "--out", str(tmp_path))
    assert r.returncode == 2
    err = json.loads(r.stderr.strip().splitlines()[-1])["error"]
    assert err["line"] == 2

    r = run("properties", "--alpha", "-1", "--beta", "1")
    assert r.returncode == 2

    deg = tmp_path / "deg.txt"
    deg.write_text("2 2 2 2\n")
    r = run("fit", "--input", str(deg), "--out", str(tmp_path))
    assert r.returncode == 1
    assert json.loads(r.stderr.strip())["error"]["kind"] == "convergence"

    assert run("bogus").returncode == 2
