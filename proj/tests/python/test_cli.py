# Copyright the qhamming developers.
# SPDX-License-Identifier: Apache-2.0
"""End-to-end tests of the command line binary, driven over subprocesses.

The binary path comes from the QHAMMING_CLI environment variable, which the
build injects into the test run.  Exit-code contract under test: 0 success,
1 failed verification, 2 invalid input or usage, 3 non-convergence.
"""

import json
import os
import subprocess

import pytest

if "QHAMMING_CLI" not in os.environ:
    pytest.skip("QHAMMING_CLI is not set", allow_module_level=True)

CLI = os.environ["QHAMMING_CLI"]


def run(*args, stdin=None, env=None):
    """Run the binary with a clean tolerance environment; return the process."""
    full_env = dict(os.environ)
    full_env.pop("QHAMMING_TOL", None)
    if env:
        full_env.update(env)
    return subprocess.run(
        [CLI, *args], input=stdin, capture_output=True, text=True, env=full_env
    )


def gen(kind, *extra, seed=1):
    proc = run("gen", "--kind", kind, "--seed", str(seed), "--out", "-", *extra)
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


def test_help_lists_subcommands():
    proc = run("--help")
    assert proc.returncode == 0
    for name in ("classical", "quantum", "verify", "gen"):
        assert name in proc.stdout


def test_gen_is_deterministic_per_seed():
    first = gen("quantum-observable", "--dims", "2,2", seed=5)
    second = gen("quantum-observable", "--dims", "2,2", seed=5)
    assert first == second
    other = gen("quantum-observable", "--dims", "2,2", seed=6)
    assert other != first


def test_gen_to_seminorm_pipeline():
    instance = gen("quantum-observable", "--dims", "2,2", seed=7)
    proc = run("quantum", "seminorm", "--in", "-", stdin=instance)
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["converged"] is True
    assert len(report["sites"]) == 2
    assert report["lower"] <= report["value"] + 1e-12
    assert report["max_gap"] >= 0
    for site in report["sites"]:
        assert site["lower_bound"] <= site["value"] + 1e-12
    # The solver is deterministic, so the report is byte-stable.
    again = run("quantum", "seminorm", "--in", "-", stdin=instance)
    assert again.stdout == proc.stdout


@pytest.mark.parametrize(
    "kind,extra,consumer",
    [
        ("classical-lipschitz", ("--slots", "2"), ("classical", "lipschitz")),
        ("classical-kantorovich", ("--points", "4"), ("classical", "kantorovich")),
        ("classical-decompose", ("--alphabet", "2,3"), ("classical", "decompose")),
        ("quantum-observable", ("--dims", "2,2"), ("quantum", "seminorm")),
        ("quantum-state-pair", ("--dims", "2,2"), ("quantum", "w1")),
        ("quantum-state-pair", ("--dims", "2,2"), ("quantum", "telescope")),
    ],
)
def test_generated_instances_round_trip(kind, extra, consumer):
    for seed in (1, 2, 3):
        instance = gen(kind, *extra, seed=seed)
        proc = run(*consumer, "--in", "-", stdin=instance)
        assert proc.returncode == 0, f"{kind} seed {seed}: {proc.stderr}"
        json.loads(proc.stdout)


def test_file_and_stdin_inputs_agree(tmp_path):
    path = tmp_path / "instance.json"
    proc = run("gen", "--kind", "classical-kantorovich", "--points", "4",
               "--seed", "11", "--out", str(path))
    assert proc.returncode == 0, proc.stderr
    instance = path.read_text()
    assert instance == gen("classical-kantorovich", "--points", "4", seed=11)
    from_file = run("classical", "kantorovich", "--in", str(path))
    from_stdin = run("classical", "kantorovich", "--in", "-", stdin=instance)
    assert from_file.returncode == 0, from_file.stderr
    assert from_file.stdout == from_stdin.stdout
    result = json.loads(from_file.stdout)
    assert result["value"] >= 0


def test_witness_certifies_product_diameter():
    proc = run("quantum", "witness", "--dims", "2", "2")
    assert proc.returncode == 0, proc.stderr
    out = json.loads(proc.stdout)
    assert out["lower_bound"] >= 2 - 1e-4
    report = out["report"]
    assert report["converged"] is True
    assert abs(report["value"] - 2) <= 1e-4


def test_quick_verify_passes():
    proc = run("verify", "--suite", "classical", "--sizes", "2")
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["pass"] is True
    assert report["suite"] == "classical"
    assert all(check["pass"] for check in report["checks"])


@pytest.mark.parametrize(
    "args,stdin",
    [
        (("quantum", "seminorm", "--in", "-"), "not json"),
        (("quantum", "seminorm", "--in", "/nonexistent/file.json"), None),
        (("gen", "--kind", "bogus"), None),
        (("gen",), None),  # --kind is required
        (("quantum", "seminorm", "--bogus-flag"), None),
        (("verify", "--suite", "bogus"), None),
        (("classical", "kantorovich", "--in", "-"),
         '{"schema_version": 1, "kind": "classical-kantorovich"}'),
    ],
)
def test_invalid_input_exits_2(args, stdin):
    proc = run(*args, stdin=stdin)
    assert proc.returncode == 2


def test_wrong_instance_kind_exits_2():
    instance = gen("classical-lipschitz", "--slots", "2", seed=2)
    proc = run("quantum", "seminorm", "--in", "-", stdin=instance)
    assert proc.returncode == 2
    error = json.loads(proc.stderr)
    assert "kind" in error["error"]
    assert proc.stdout == ""


def test_unreachable_tolerance_exits_3_with_honest_report():
    instance = gen("quantum-observable", "--dims", "2,2", seed=3)
    proc = run("quantum", "seminorm", "--in", "-", "--tol", "1e-14", stdin=instance)
    assert proc.returncode == 3
    report = json.loads(proc.stdout)
    assert report["converged"] is False
    assert report["max_gap"] > 1e-14  # the gap it could not close is reported


def test_tolerance_environment_variable_and_flag_precedence():
    instance = gen("quantum-observable", "--dims", "2,2", seed=3)
    strict = run("quantum", "seminorm", "--in", "-", stdin=instance,
                 env={"QHAMMING_TOL": "1e-14"})
    assert strict.returncode == 3
    # An explicit flag overrides the environment.
    flag_wins = run("quantum", "seminorm", "--in", "-", "--tol", "1e-6",
                    stdin=instance, env={"QHAMMING_TOL": "1e-14"})
    assert flag_wins.returncode == 0
    bad = run("quantum", "seminorm", "--in", "-", stdin=instance,
              env={"QHAMMING_TOL": "not-a-number"})
    assert bad.returncode == 2


def test_validation_errors_are_json_on_stderr():
    proc = run("quantum", "seminorm", "--in", "-", stdin="{}")
    assert proc.returncode == 2
    assert proc.stdout == ""
    error = json.loads(proc.stderr)
    assert isinstance(error["error"], str) and error["error"]
