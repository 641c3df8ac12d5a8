"""End-to-end tests for the command line tool (path in $LIEGEO_CLI)."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("LIEGEO_CLI", "liegeo")

EXAMPLE5 = {
    "name": "example5",
    "dim": 5,
    "brackets": [
        {"i": 1, "j": 2, "coeffs": {"2": 3.0}},
        {"i": 1, "j": 3, "coeffs": {"3": -4.0}},
        {"i": 1, "j": 4, "coeffs": {"4": -1.0}},
        {"i": 1, "j": 5, "coeffs": {"5": 2.0}},
        {"i": 2, "j": 3, "coeffs": {"4": 1.0}},
        {"i": 2, "j": 4, "coeffs": {"5": 1.0}},
    ],
}

H2 = {
    "name": "heisenberg5",
    "dim": 5,
    "brackets": [
        {"i": 1, "j": 2, "coeffs": {"5": 1.0}},
        {"i": 3, "j": 4, "coeffs": {"5": 1.0}},
    ],
}

SOLV4 = {
    "name": "solv4_heisenberg",
    "dim": 4,
    "brackets": [
        {"i": 1, "j": 2, "coeffs": {"2": 1.0}},
        {"i": 1, "j": 3, "coeffs": {"3": -1.0}},
        {"i": 2, "j": 3, "coeffs": {"4": 1.0}},
    ],
}

ABELIAN3 = {"name": "abelian3", "dim": 3, "brackets": []}


def write(tmp_path, doc, name="problem.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def run_json(*args):
    proc = run("--json", *args)
    return proc, json.loads(proc.stdout) if proc.stdout.strip() else None


def test_check_example5(tmp_path):
    proc, report = run_json("check", write(tmp_path, EXAMPLE5))
    assert proc.returncode == 0
    assert report["is_lie_algebra"] is True
    assert report["unimodular"] is True
    assert report["solvable"] is True
    assert report["nilpotent"] is False
    assert report["derived_dim"] == 4
    assert report["center_dim"] == 0


def test_check_abelian(tmp_path):
    proc, report = run_json("check", write(tmp_path, ABELIAN3))
    assert proc.returncode == 0
    assert report["derived_dim"] == 0
    assert report["center_dim"] == 3


def test_check_rejects_bad_index(tmp_path):
    doc = {"dim": 5, "brackets": [{"i": 1, "j": 7, "coeffs": {"2": 1.0}}]}
    proc = run("check", write(tmp_path, doc))
    assert proc.returncode == 1
    assert "outside" in proc.stderr


def test_check_detects_non_lie(tmp_path):
    doc = {
        "dim": 5,
        "brackets": [
            {"i": 1, "j": 2, "coeffs": {"2": 3.0}},
            {"i": 1, "j": 3, "coeffs": {"3": -4.0}},
            {"i": 1, "j": 4, "coeffs": {"4": 1.0}},
            {"i": 1, "j": 5, "coeffs": {"5": 2.0}},
            {"i": 2, "j": 3, "coeffs": {"4": 1.0}},
            {"i": 2, "j": 4, "coeffs": {"5": 1.0}},
        ],
    }
    proc, report = run_json("check", write(tmp_path, doc))
    assert proc.returncode == 2
    assert report["is_lie_algebra"] is False


def test_basis_dim4_heisenberg(tmp_path):
    proc, report = run_json("basis", write(tmp_path, SOLV4))
    assert proc.returncode == 0
    assert report["construction"] == "dim4/derived_dim3_heisenberg"
    assert report["verdict"] == "orthonormal_geodesic"
    assert abs(report["heisenberg_check"]["a_plus_d"]) <= 1e-9
    assert max(report["geodesic_residuals"]) <= 1e-8
    assert report["gram_deviation"] <= 1e-8


def test_basis_nilpotent_h2(tmp_path):
    proc, report = run_json("basis", write(tmp_path, H2))
    assert proc.returncode == 0
    assert report["construction"] == "nilpotent"
    assert report["verdict"] == "orthonormal_geodesic"


def test_basis_milnor_dim3(tmp_path):
    sl2 = {
        "name": "sl2",
        "dim": 3,
        "brackets": [
            {"i": 2, "j": 3, "coeffs": {"1": 1.0}},
            {"i": 3, "j": 1, "coeffs": {"2": 1.0}},
            {"i": 1, "j": 2, "coeffs": {"3": -1.0}},
        ],
        "gram": [[2, 0, 0], [0, 1, 0.25], [0, 0.25, 1]],
    }
    proc, report = run_json("basis", write(tmp_path, sl2))
    assert proc.returncode == 0
    assert report["construction"] == "milnor_dim3"
    assert report["verdict"] == "orthonormal_geodesic"
    assert len(report["milnor_lambdas"]) == 3


def test_basis_codim1_path(tmp_path):
    # R acting on an abelian R^4 by diag(1, 2, -0.5, -2.5): unimodular,
    # non-nilpotent, dimension 5, with the fiber as codim-1 abelian ideal
    doc = {
        "name": "rtimes_r4",
        "dim": 5,
        "brackets": [
            {"i": 1, "j": 2, "coeffs": {"2": 1.0}},
            {"i": 1, "j": 3, "coeffs": {"3": 2.0}},
            {"i": 1, "j": 4, "coeffs": {"4": -0.5}},
            {"i": 1, "j": 5, "coeffs": {"5": -2.5}},
        ],
    }
    proc, report = run_json("basis", write(tmp_path, doc))
    assert proc.returncode == 0
    assert report["construction"] == "codim1_abelian"
    assert report["verdict"] == "orthonormal_geodesic"


def test_basis_example5_has_no_construction(tmp_path):
    proc = run("basis", write(tmp_path, EXAMPLE5))
    assert proc.returncode == 3
    assert "no implemented construction" in proc.stderr


def test_geodesics_span(tmp_path):
    proc, report = run_json("geodesics", write(tmp_path, EXAMPLE5))
    assert proc.returncode == 0
    assert report["span_rank"] == 4

    doc = dict(EXAMPLE5)
    doc["gram"] = [
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0.5],
        [0, 0, 0, 0.5, 1],
    ]
    proc, report = run_json("geodesics", write(tmp_path, doc, "epsilon.json"))
    assert proc.returncode == 0
    assert report["span_rank"] == 5


def test_geodesics_abelian_full_rank(tmp_path):
    proc, report = run_json("geodesics", write(tmp_path, ABELIAN3))
    assert proc.returncode == 0
    assert report["span_rank"] == 3


def test_geodesics_deterministic(tmp_path):
    path = write(tmp_path, EXAMPLE5)
    out1 = run("--json", "geodesics", path, "--seed", "99").stdout
    out2 = run("--json", "geodesics", path, "--seed", "99").stdout
    assert out1 == out2


def test_counterexample_deterministic():
    out1 = run("--json", "counterexample", "--random", "3", "--seed", "11").stdout
    out2 = run("--json", "counterexample", "--random", "3", "--seed", "11").stdout
    assert out1 == out2


def test_counterexample_epsilon():
    proc, report = run_json("counterexample", "--epsilon", "0.5")
    assert proc.returncode == 0
    assert report["all_conclusions_true"] is True
    assert report["quartic"]["coefficients"] == [-0.5, -2.125, 1.75, 4.5, 2.0]
    assert report["spanning_geodesics"]["span_rank"] == 5
    assert report["certificates"][0]["conclusion"] is True


def test_counterexample_identity_default():
    proc, report = run_json("counterexample")
    assert proc.returncode == 0
    assert report["certificates"][0]["metric"] == "identity"
    assert report["certificates"][0]["trace_ad_x1_on_v3"] == -3.0


def test_counterexample_random():
    proc, report = run_json("counterexample", "--random", "5", "--seed", "7")
    assert proc.returncode == 0
    assert len(report["certificates"]) == 5
    assert all(c["conclusion"] for c in report["certificates"])


def test_counterexample_gram_file(tmp_path):
    gram = [[1, 0, 0, 0, 0], [0, 2, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]
    path = tmp_path / "gram.json"
    path.write_text(json.dumps(gram))
    proc, report = run_json("counterexample", "--gram", str(path))
    assert proc.returncode == 0
    assert report["all_conclusions_true"] is True


def test_counterexample_epsilon_out_of_range():
    proc = run("counterexample", "--epsilon", "1.5")
    assert proc.returncode == 1


@pytest.mark.parametrize("args", [["check"], ["basis"], ["geodesics"]])
def test_missing_file_argument(args):
    proc = run(*args)
    assert proc.returncode != 0
