"""Command line behavior: golden outputs, formats, exit codes, determinism."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from seshadri.cli import main

GOLDEN_TABLE = """\
# command\ttable
# input.dmax\t10
n\td\tm\th0\tconditions\tepsilon
2\t1\t2\t3\t2\t1
3\t1\t2\t3\t2\t3/2
4\t1\t2\t3\t2\t2
5\t2\t5\t6\t5\t2
6\t2\t5\t6\t5\t12/5
7\t3\t8\t10\t9\t21/8
8\t6\t17\t28\t27\t48/17
9\t3\t9\t10\t9\t3
verified\ttrue
# provenance\tsearch over degrees with exact condition counting
# provenance\tchecked against the built-in reference values
"""


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------------- table

def test_table_golden_tsv(capsys):
    code, out, _ = run(capsys, "table")
    assert code == 0
    assert out == GOLDEN_TABLE


def test_table_tight_dmax_identical(capsys):
    code, out, _ = run(capsys, "table", "--dmax", "6")
    assert code == 0
    assert out.replace("# input.dmax\t6", "# input.dmax\t10") == GOLDEN_TABLE


def test_table_json_rows(capsys):
    code, out, _ = run(capsys, "table", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    rows = payload["results"]["table"]["rows"]
    assert rows[6] == [8, 6, 17, 28, 27, "48/17"]
    assert payload["results"]["verified"] is True


def test_table_underpowered_search_fails_verification(capsys):
    code, out, _ = run(capsys, "table", "--dmax", "1")
    assert code == 2
    assert "false" in out


def test_table_deterministic(capsys):
    _, first, _ = run(capsys, "table", "--format", "json")
    _, second, _ = run(capsys, "table", "--format", "json")
    assert first == second


# ------------------------------------------------------------------ bounds

def test_bounds_square_case(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "4")
    assert code == 0
    assert "lower\t2" in out
    assert "upper\t2" in out
    assert "maximal\ttrue" in out


def test_bounds_irrational_case(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "2")
    assert code == 0
    assert "upper\tsqrt(2)" in out
    assert "upper_approx\t1.4142135623730950488" in out
    assert "maximal\tfalse" in out


def test_bounds_scaled_generator(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "3", "--l2", "3")
    assert code == 0
    assert "lower\t3" in out and "maximal\ttrue" in out


def test_bounds_usage_errors(capsys):
    code, _, err = run(capsys, "bounds", "--n", "1")
    assert code == 1 and "usage error" in err
    code, _, err = run(capsys, "bounds", "--n", "4", "--r", "0")
    assert code == 1


# ----------------------------------------------------------------- cluster

def test_cluster_quintic(capsys):
    code, out, _ = run(capsys, "cluster", "--curve", "x^5+y^2", "--branch", "y=0", "--n", "3")
    assert code == 0
    assert "mults\t2,2,1" in out
    assert "total\t5" in out
    assert "pullback_multiplicity\t5" in out
    assert "verified\ttrue" in out


def test_cluster_transverse_line(capsys):
    code, out, _ = run(capsys, "cluster", "--curve", "x", "--branch", "y=0", "--n", "2")
    assert code == 0
    assert "mults\t1,0" in out


def test_cluster_tangent_cubic(capsys):
    code, out, _ = run(capsys, "cluster", "--curve", "y-x^3", "--branch", "y=0", "--n", "3")
    assert code == 0
    assert "mults\t1,1,1" in out and "verified\ttrue" in out


def test_cluster_curve_file(tmp_path, capsys):
    # x + y^2 from the monomial-list format: pullback min(1, 4) = 1
    path = tmp_path / "curve.txt"
    path.write_text("1 0 1\n0 2 1\n", encoding="utf-8")
    code, out, _ = run(capsys, "cluster", "--curve-file", str(path), "--n", "2")
    assert code == 0
    assert "mults\t1,0" in out
    assert "total\t1" in out
    assert "verified\ttrue" in out
    assert "\n0 2 1" not in out  # multi-line input stays on one TSV record


def test_cluster_precision_shortfall_exit_code(capsys):
    code, out, _ = run(capsys, "cluster", "--curve", "y",
                       "--branch", "y+y^2-x^2", "--n", "3", "--precision", "2")
    assert code == 3
    assert "determinate\tfalse" in out


def test_cluster_implicit_branch_verifies(capsys):
    code, out, _ = run(capsys, "cluster", "--curve", "y - x^2",
                       "--branch", "y+y^2-x^2", "--n", "4", "--precision", "24")
    assert code == 0
    assert "verified\ttrue" in out


def test_cluster_rejects_garbage(capsys):
    code, _, err = run(capsys, "cluster", "--curve", "z^2", "--n", "2")
    assert code == 1 and "usage error" in err
    code, _, err = run(capsys, "cluster", "--curve", "0", "--n", "2")
    assert code == 1


# ----------------------------------------------------------------- witness

def test_witness_n8_preset(capsys):
    code, out, _ = run(capsys, "witness", "n8", "--b", "1")
    assert code == 0
    assert "exists\tfalse" in out
    assert "kernel_dim\t0" in out


def test_witness_n8_larger_b(capsys):
    for b in ("2", "3"):
        code, out, _ = run(capsys, "witness", "n8", "--b", b)
        assert code == 0 and "exists\tfalse" in out


def test_witness_explicit_problem(capsys):
    code, out, _ = run(capsys, "witness", "--branch", "y=x^2",
                       "--degree", "2", "--mult", "1", "--target", "5")
    assert code == 0
    assert "exists\ttrue" in out
    assert "-y + x^2" in out


def test_witness_trivial_line_case(capsys):
    code, out, _ = run(capsys, "witness", "--branch", "y=0",
                       "--degree", "1", "--mult", "0", "--target", "1")
    assert code == 0
    assert "kernel_dim\t2" in out


def test_witness_precision_shortfall(capsys):
    code, _, err = run(capsys, "witness", "--branch", "y+y^2-x^2",
                       "--degree", "3", "--mult", "2", "--target", "9",
                       "--precision", "5")
    assert code == 3
    assert "precision" in err


def test_witness_missing_flags(capsys):
    code, _, err = run(capsys, "witness", "--degree", "3")
    assert code == 1 and "usage error" in err


# ------------------------------------------------------------------ nagata

def test_nagata_known_small_count(capsys):
    code, out, _ = run(capsys, "nagata", "--n", "9")
    assert code == 0
    assert "bound\t3" in out
    assert "eps_source\tknown" in out


def test_nagata_user_supplied(capsys):
    code, out, _ = run(capsys, "nagata", "--n", "8", "--eps", "6/17")
    assert code == 0
    assert "bound\t48/17" in out
    assert "eps_source\tuser-supplied" in out


def test_nagata_conjecture_square(capsys):
    code, out, _ = run(capsys, "nagata", "--n", "16", "--conjecture")
    assert code == 0
    assert "bound\t4" in out
    assert "maximal\ttrue" in out


def test_nagata_conjecture_non_square(capsys):
    code, out, _ = run(capsys, "nagata", "--n", "11", "--conjecture")
    assert code == 0
    assert "eps_source\tconjectural" in out
    assert "maximal\ttrue" in out  # n * 1/sqrt(n) = sqrt(n)


def test_nagata_small_count_falls_back_to_table(capsys):
    code, out, _ = run(capsys, "nagata", "--n", "3", "--r", "3", "--conjecture")
    assert code == 0
    assert "bound\t1" in out  # 3 * eps(O(1); 9) = 3 * 1/3
    assert "bundled known value" in out


def test_nagata_requires_source_for_large_counts(capsys):
    code, _, err = run(capsys, "nagata", "--n", "12")
    assert code == 1 and "usage error" in err


# ------------------------------------------------------------------- misc

def test_unknown_command_is_usage_error(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 1 and "usage error" in err


def test_env_var_sets_default_precision(capsys, monkeypatch):
    monkeypatch.setenv("SESHADRI_PRECISION_DEFAULT", "2")
    code, out, _ = run(capsys, "cluster", "--curve", "y", "--branch", "y+y^2-x^2", "--n", "3")
    assert code == 3
    monkeypatch.setenv("SESHADRI_PRECISION_DEFAULT", "24")
    code, out, _ = run(capsys, "cluster", "--curve", "y", "--branch", "y+y^2-x^2", "--n", "3")
    assert code == 0
    monkeypatch.setenv("SESHADRI_PRECISION_DEFAULT", "zero")
    code, _, err = run(capsys, "cluster", "--curve", "y", "--branch", "y+y^2-x^2", "--n", "3")
    assert code == 1 and "usage error" in err


def test_json_reports_are_sorted_and_stable(capsys):
    _, out, _ = run(capsys, "nagata", "--n", "8", "--eps", "6/17", "--format", "json")
    payload = json.loads(out)
    assert list(payload) == sorted(payload)
    _, again, _ = run(capsys, "nagata", "--n", "8", "--eps", "6/17", "--format", "json")
    assert out == again


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "seshadri", "table"],
        capture_output=True, text=True, check=False,
        env={"PATH": "/usr/bin:/bin", "PYTHONPATH": "src"},
        cwd="/root/pkg",
    )
    assert proc.returncode == 0
    assert "48/17" in proc.stdout
