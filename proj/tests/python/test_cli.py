"""CLI contract tests: exit codes, schema validity, determinism."""

import json
import os
import pathlib
import subprocess

import pytest

CLI = os.environ.get("RANKLAB_CLI")
if CLI is None:
    guess = pathlib.Path(__file__).resolve().parents[2] / "build" / "ranklab"
    CLI = str(guess) if guess.exists() else None

pytestmark = pytest.mark.skipif(CLI is None, reason="ranklab binary not found")


def schema():
    path = os.environ.get("RANKLAB_SCHEMA")
    if path is None:
        path = pathlib.Path(__file__).resolve().parents[2] / "docs" / "report.schema.json"
    with open(path) as f:
        return json.load(f)


try:
    import jsonschema

    VALIDATOR = jsonschema.Draft7Validator(schema())
except ImportError:  # pragma: no cover
    VALIDATOR = None


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def doc_of(proc):
    doc = json.loads(proc.stdout)
    if VALIDATOR is not None:
        VALIDATOR.validate(doc)
    return doc


def test_rank_success():
    proc = run("rank", "--coeffs", "1,0,0,1")
    assert proc.returncode == 0
    doc = doc_of(proc)
    assert doc["kind"] == "rank"
    assert doc["complex"]["rank"] == 2


def test_rank_accepts_rationals_and_spaces():
    proc = run("rank", "--coeffs", "2/3 0 -4/3")
    assert proc.returncode == 0
    assert doc_of(proc)["form"]["coefficients"] == ["1", "0", "-2"]


def test_input_errors_exit_1():
    assert run("rank", "--coeffs", "1,x,3").returncode == 1
    assert run("rank", "--coeffs", "5").returncode == 1
    assert run("rank", "--coeffs", "0,0,0").returncode == 1
    assert run("decompose", "--coeffs", "1,0,1", "--label", "2,1").returncode == 1
    assert run("decompose", "--coeffs", "1,0,1", "--label", "1,1").returncode == 1
    assert run("verify", "nonsense", "--degree", "3", "--count", "5").returncode != 0


def test_strict_bracket_exits_2():
    # degree-7 form whose real rank is only bracketed as [5, 6]
    form = "2,-1,-2,-1,-1,-2,-3,0"
    loose = run("rank", "--coeffs", form)
    assert loose.returncode == 0
    doc = doc_of(loose)
    assert doc["real"]["exact"] is False
    assert (doc["real"]["lo"], doc["real"]["hi"]) == (5, 6)

    strict = run("rank", "--coeffs", form, "--strict")
    assert strict.returncode == 2
    assert "inconclusive" in strict.stderr


def test_partial_label_absence_exits_2():
    proc = run("decompose", "--coeffs", "2,-1,-2,-1,-1,-2,-3,0", "--label", "5,0")
    assert proc.returncode == 2
    assert "partial" in proc.stderr


def test_decompose_round_trip():
    proc = run("decompose", "--coeffs", "1,0,-1", "--label", "2,1")
    assert proc.returncode == 0
    doc = doc_of(proc)
    assert doc["verification"]["pass"] is True
    assert doc["decomposition"]["label"] == {"s": 2, "a": 1}
    assert doc["decomposition"]["residual_bound"] == "0"


def test_labels_at_marks_non_normative():
    proc = run("labels", "--coeffs", "1,0,0,1", "--at", "4")
    assert proc.returncode == 0
    assert "NON-NORMATIVE" in proc.stderr
    assert doc_of(proc)["non_normative"] is True

    normative = run("labels", "--coeffs", "1,0,0,1")
    assert normative.returncode == 0
    assert "NON-NORMATIVE" not in normative.stderr
    assert doc_of(normative)["non_normative"] is False


def test_verify_pass_and_fail_exit_codes():
    good = run("verify", "generic-admissible", "--degree", "3", "--count", "40", "--seed", "1")
    assert good.returncode == 0
    assert doc_of(good)["pass"] is True
    assert "PASS" in good.stderr

    bad = run("verify", "labels-odd", "--degree", "7", "--count", "6", "--seed", "1")
    assert bad.returncode == 3
    assert doc_of(bad)["pass"] is False
    assert "FAIL" in bad.stderr


def test_sample_json_and_csv_deterministic_across_jobs(tmp_path):
    outs = {}
    for report in ("json", "csv"):
        for jobs in ("1", "4"):
            path = tmp_path / f"{report}-{jobs}.out"
            proc = run("sample", "--degree", "3", "--count", "40", "--seed", "2", "--jobs",
                       jobs, "--report", report, "--out", str(path))
            assert proc.returncode == 0
            outs[(report, jobs)] = path.read_bytes()
    assert outs[("json", "1")] == outs[("json", "4")]
    assert outs[("csv", "1")] == outs[("csv", "4")]
    doc = json.loads(outs[("json", "1")])
    if VALIDATOR is not None:
        VALIDATOR.validate(doc)
    assert "jobs" not in doc["config"]
    header = outs[("csv", "1")].decode().splitlines()[0]
    assert header.startswith("index,stream,degree,coefficients")


def test_jobs_env_default():
    env = dict(os.environ, RANKLAB_JOBS="4")
    proc = subprocess.run(
        [CLI, "sample", "--degree", "2", "--count", "10", "--seed", "5"],
        capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    ref = run("sample", "--degree", "2", "--count", "10", "--seed", "5")
    assert proc.stdout == ref.stdout


def test_survey():
    proc = run("survey", "--a", "0", "--degree", "2", "--count", "50", "--seed", "3")
    assert proc.returncode == 0
    doc = doc_of(proc)
    assert doc["kind"] == "verify"
    assert doc["check"] == "a-rank-survey"
    assert any(k.startswith("c=") for k in doc["stats"])
