"""End-to-end checks of the centred-sums executable."""

import json
import os
import subprocess
from pathlib import Path

import pytest

BIN = os.environ.get("CENTRED_SUMS_BIN")
SCHEMA = Path(__file__).resolve().parents[2] / "schema" / "centred-sums.schema.json"

pytestmark = pytest.mark.skipif(not BIN, reason="CENTRED_SUMS_BIN not set")


def run(*args, env=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


def run_json(*args):
    jsonschema = pytest.importorskip("jsonschema")
    p = run(*args, "--format", "json")
    doc = json.loads(p.stdout)
    jsonschema.validate(doc, json.loads(SCHEMA.read_text()))
    return p.returncode, doc


def test_compute_all_agrees():
    p = run("compute", "--r", "3", "--n", "4", "--method", "all")
    assert p.returncode == 0
    lines = p.stdout.strip().splitlines()
    assert lines[-1] == "AGREE"
    rows = lines[:-1]
    assert len(rows) == 8
    assert all(row.split()[-1] == "24" for row in rows)


def test_compute_single_values():
    assert run("compute", "--r", "2", "--n", "1").stdout == "1/2\n"
    assert run("compute", "--r", "0", "--n", "-5").stdout == "0\n"


def test_compute_domain_error_names_range():
    p = run("compute", "--r", "3", "--n", "3", "--method", "gz")
    assert p.returncode == 2
    assert "S_{2r-1}(n) for r >= 1" in p.stderr


def test_usage_errors_exit_2():
    assert run("compute", "--r", "1").returncode == 2
    assert run("compute", "--r", "1", "--n", "2", "--method", "nope").returncode == 2
    assert run("oeis", "--name", "nope").returncode == 2
    assert run("compute", "--r", "1", "--n", "2", "--format", "bfile").returncode == 2
    assert run("poly", "--family", "F", "--r", "0").returncode == 2


def test_poly():
    assert run("poly", "--family", "Q", "--r", "4").stdout == "n(105n^3 - 210n^2 + 147n - 34)\n"
    assert run("poly", "--family", "F", "--r", "2").stdout == "x*y + x*z + y*z\n"
    assert run("poly", "--family", "Pbar", "--r", "0").stdout == "1\n"
    code, doc = run_json("poly", "--family", "Q", "--r", "4")
    assert code == 0
    assert doc["results"][0]["coefficients"] == ["0", "-34", "147", "-210", "105"]


def test_oeis():
    assert run("oeis", "--name", "reduced-tangent", "--count", "5").stdout == "1 1 4 34 496\n"
    assert run("oeis", "--name", "qbar-at-one", "--count", "3").stdout == "1 3 21\n"
    bfile = run("oeis", "--name", "secant", "--count", "4", "--format", "bfile").stdout
    assert bfile == "0 1\n1 1\n2 5\n3 61\n"
    assert bfile == run("oeis", "--name", "secant", "--count", "4", "--format", "bfile").stdout
    genocchi = run("oeis", "--name", "genocchi", "--count", "3", "--format", "bfile").stdout
    assert genocchi == "1 -1\n2 1\n3 -3\n"


def test_table():
    p = run("table", "--r", "0..2", "--n", "0..3", "--format", "csv")
    lines = p.stdout.strip().splitlines()
    assert lines[0] == "r,n,numerator,denominator_log2"
    assert len(lines) == 13
    assert "2,3,6,0" in lines
    assert "2,1,1,1" in lines
    single = run("table", "--r", "1..1", "--n", "0..0", "--format", "csv").stdout
    assert single.splitlines()[1] == "1,0,0,0"
    powers = run("table", "--r", "0..0", "--n", "0..5", "--format", "csv").stdout.splitlines()[1:]
    assert [int(line.split(",")[2]) for line in powers] == [1, 2, 4, 8, 16, 32]


def test_table_respects_cache_cap():
    env = dict(os.environ, CENTRED_SUMS_CACHE_CAP="2")
    p = run("table", "--r", "6..6", "--n", "10..10", "--format", "csv", env=env)
    assert p.returncode == 0
    assert p.stdout.splitlines()[1] == "6,10,194560,0"
    env["CENTRED_SUMS_CACHE_CAP"] = "lots"
    assert run("table", env=env).returncode == 2


def test_verify_json_schema():
    code, doc = run_json("verify", "--suite", "tables")
    assert code == 0
    assert doc["manifest"]["command"] == "verify"
    assert doc["summary"]["failures"] == 0
    ids = [r["id"] for r in doc["results"]]
    assert ids == sorted(ids)
    assert sum(i.startswith("tables/published/") for i in ids) == 24


def test_verify_egf_and_all():
    assert run("verify", "--suite", "egf", "--order", "16", "--n-max", "6").returncode == 0
    p = run("verify", "--suite", "all", "--r-max", "8", "--n-max", "30", "--jobs", "2")
    assert p.returncode == 0, p.stdout


def test_jobs_do_not_change_output():
    a = run("verify", "--suite", "closed-forms", "--r-max", "5", "--n-max", "12", "--format", "csv")
    b = run("verify", "--suite", "closed-forms", "--r-max", "5", "--n-max", "12", "--jobs", "3",
            "--format", "csv")
    assert a.stdout == b.stdout


def test_compute_json_schema():
    code, doc = run_json("compute", "--r", "4", "--n", "6", "--method", "all")
    assert code == 0
    assert doc["verdict"] == "AGREE"
    assert {r["actual"] for r in doc["results"]} == {"384"}


def test_walk():
    p = run("walk", "--r", "3", "--n", "7", "--count", "100000", "--seed", "9")
    assert p.returncode == 0
    assert p.stdout == run("walk", "--r", "3", "--n", "7", "--count", "100000", "--seed", "9").stdout
