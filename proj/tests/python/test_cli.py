"""End-to-end CLI tests driven through the built binary."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("CCOL_CLI", "ccol")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


@pytest.fixture
def tmp_instance(tmp_path):
    def gen(family, n, seed, p=None):
        out = tmp_path / f"{family}_{n}_{seed}.txt"
        args = ["gen", "--family", family, "--n", str(n), "--seed", str(seed), "--out", str(out)]
        if p is not None:
            args += ["--p", str(p)]
        assert run(*args).returncode == 0
        return out

    return gen


def test_gen_is_deterministic(tmp_instance, tmp_path):
    a = tmp_instance("uniform3cc", 10, 7)
    b = tmp_path / "again.txt"
    run("gen", "--family", "uniform3cc", "--n", "10", "--seed", "7", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_solve_check_pipeline(tmp_instance, tmp_path):
    inst = tmp_instance("planted3cc", 15, 3)
    solved = run("solve", str(inst))
    assert solved.returncode == 0
    assert solved.stdout.startswith("s SAT\n")
    sol = tmp_path / "sol.txt"
    sol.write_text(solved.stdout)
    assert run("check", str(inst), str(sol)).returncode == 0

    # Corrupt the first value line.
    lines = solved.stdout.splitlines()
    value = lines[1].split()[2]
    lines[1] = "v 0 " + {"R": "G", "G": "B", "B": "R"}[value]
    bad = tmp_path / "bad.txt"
    bad.write_text("\n".join(lines) + "\n")
    if run("check", str(inst), str(bad)).returncode == 0:
        # The flipped colour may still be feasible; force an infeasible one by
        # checking against a fresh UNSAT claim instead.
        unsat = tmp_path / "unsat.txt"
        unsat.write_text("s UNSAT\n")
        assert run("check", str(inst), str(unsat)).returncode == 1


UNSAT_8 = (
    "p 3cc 8\n"
    "e 0 1 R\ne 0 2 G\ne 0 3 R\ne 0 4 G\ne 0 5 R\ne 0 6 B\ne 0 7 G\n"
    "e 1 2 R\ne 1 3 G\ne 1 4 B\ne 1 5 B\ne 1 6 R\ne 1 7 R\n"
    "e 2 3 R\ne 2 4 R\ne 2 5 G\ne 2 6 G\ne 2 7 B\n"
    "e 3 4 B\ne 3 5 B\ne 3 6 R\ne 3 7 R\n"
    "e 4 5 G\ne 4 6 G\ne 4 7 R\n"
    "e 5 6 R\ne 5 7 G\n"
    "e 6 7 G\n"
)


def test_unsat_exit_code(tmp_path):
    inst = tmp_path / "unsat8.txt"
    inst.write_text(UNSAT_8)
    assert run("solve", str(inst)).returncode == 20
    assert run("oracle", str(inst)).returncode == 20
    assert run("solve", str(inst)).stdout == "s UNSAT\n"


def test_solve_agrees_with_oracle(tmp_instance):
    for seed in range(5):
        inst = tmp_instance("uniform3cc", 7, 100 + seed)
        assert run("solve", str(inst)).returncode == run("oracle", str(inst)).returncode


def test_verify_invariants_mode(tmp_instance):
    inst = tmp_instance("uniform3cc", 20, 2)
    plain = run("solve", str(inst))
    verified = run("solve", str(inst), "--verify-invariants")
    assert verified.returncode == plain.returncode
    assert verified.stdout == plain.stdout


def test_solve_json_and_stats(tmp_instance):
    inst = tmp_instance("planted3cc", 12, 9)
    out = run("solve", str(inst), "--format", "json", "--stats")
    assert out.returncode == 0
    payload = json.loads(out.stdout)
    assert payload["verdict"] == "SAT"
    assert len(payload["colouring"]) == 12
    stats = payload["stats"]
    for key in (
        "shifts",
        "boring_resolves",
        "branch_nodes",
        "leaves",
        "max_ops_per_path",
        "root_potential",
        "root_mass",
        "verdict",
        "wall_time_ms",
    ):
        assert key in stats


def test_stubborn_pipeline(tmp_instance, tmp_path):
    inst = tmp_instance("stubborn", 6, 4, p=0.5)
    solved = run("solve-stubborn", str(inst))
    oracle = run("oracle", str(inst))
    assert solved.returncode == oracle.returncode
    if solved.returncode == 0:
        sol = tmp_path / "sol.txt"
        sol.write_text(solved.stdout)
        assert run("check", str(inst), str(sol)).returncode == 0


def test_reduce_stubborn_outputs(tmp_instance, tmp_path):
    inst = tmp_instance("stubborn", 5, 8, p=0.6)
    out3cc = tmp_path / "reduced.txt"
    outmap = tmp_path / "map.json"
    assert run("reduce-stubborn", str(inst), str(out3cc), str(outmap)).returncode == 0
    assert out3cc.read_text().startswith("p 3cc ")
    payload = json.loads(outmap.read_text())
    assert payload["original_n"] == 5
    assert payload["colour_value_map"] == {"R": [2], "G": [1, 3], "B": [4]}
    assert len(payload["gadgets"]) >= 3
    # The reduced instance solves to the same verdict as the stubborn one.
    assert run("solve", str(out3cc)).returncode == run("solve-stubborn", str(inst)).returncode


def test_bench_records(tmp_path):
    out = run("bench", "--family", "uniform3cc", "--n", "40", "--count", "10", "--seed", "7")
    assert out.returncode == 0
    lines = out.stdout.strip().splitlines()
    assert len(lines) == 10
    for line in lines:
        record = json.loads(line)
        assert record["family"] == "uniform3cc"
        assert record["n"] == 40
        assert all(record["bounds"].values()), line
        assert record["stats"]["verdict"] in ("SAT", "UNSAT")


def test_usage_errors():
    assert run("solve").returncode == 64
    assert run("gen", "--family", "nope", "--n", "3", "--seed", "1", "--out", "x").returncode == 64
    assert run("solve", "/nonexistent/file").returncode == 64


def test_malformed_instance_is_a_usage_error(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("p 3cc 2\n")
    assert run("solve", str(bad)).returncode == 64
