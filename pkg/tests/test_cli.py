"""Tests for the command line interface."""

import json

import pytest

from turancycles.cli import main
from turancycles.hypergraph import new_hypergraph, parse_edge_list, write_edge_list
from turancycles.patterns import build_linear_cycle


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_formula_text(capsys):
    code, out, err = run(
        capsys, "formula", "--variant", "minimal", "--n", "10", "--k", "4",
        "--lengths", "3",
    )
    assert code == 0
    assert "value=84" in out


def test_formula_json(capsys):
    code, out, _ = run(
        capsys, "formula", "--variant", "linear", "--n", "12,13", "--k", "5",
        "--lengths", "4", "3,3", "--format", "json", "--reproducible",
    )
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["command"] == "formula"
    assert "generated_at" not in data
    rows = {
        (r["n"], tuple(r["lengths"])): r["value"] for r in data["results"]
    }
    assert rows[(12, (4,))] == 414
    assert rows[(13, (3, 3))] == 1035
    assert len(data["results"]) == 4


def test_formula_csv(capsys):
    code, out, _ = run(
        capsys, "formula", "--variant", "path", "--n", "10", "--k", "3",
        "--lengths", "3", "4", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("variant,n,k,lengths,value")
    assert "path,10,3,3,36" in lines[1]
    assert "path,10,3,4,43" in lines[2]


def test_formula_kmw(capsys):
    code, out, _ = run(
        capsys, "formula", "--variant", "kmw", "--n", "6", "--k", "3",
    )
    assert code == 0
    assert "value=6" in out


def test_formula_kmw_rejects_lengths(capsys):
    code, _, err = run(
        capsys, "formula", "--variant", "kmw", "--n", "6", "--k", "3",
        "--lengths", "3",
    )
    assert code == 2
    assert "lengths" in err


def test_formula_path_rejects_multi_lengths(capsys):
    code, _, err = run(
        capsys, "formula", "--variant", "path", "--n", "10", "--k", "3",
        "--lengths", "3,4",
    )
    assert code == 2


def test_formula_bad_int_list(capsys):
    code, _, err = run(
        capsys, "formula", "--variant", "minimal", "--n", "x", "--k", "4",
        "--lengths", "3",
    )
    assert code == 2


def test_construct_stdout_and_check_round_trip(tmp_path, capsys):
    code, out, _ = run(
        capsys, "construct", "--variant", "minimal", "--n", "10", "--k", "4",
        "--lengths", "3",
    )
    assert code == 0
    H = parse_edge_list(out)
    assert H.num_edges == 84

    hostfile = tmp_path / "host.txt"
    hostfile.write_text(out)
    code, out2, _ = run(
        capsys, "check", "--in", str(hostfile), "--spec", "minimal:3",
        "--reproducible",
    )
    assert code == 0
    verdict = json.loads(out2)
    assert verdict["found"] is False
    assert verdict["witnesses"] == []
    assert verdict["num_edges"] == 84


def test_construct_out_file(tmp_path, capsys):
    target = tmp_path / "meet.txt"
    code, out, _ = run(
        capsys, "construct", "--variant", "meeting", "--n", "8", "--k", "3",
        "--s-set", "0,1", "--out", str(target),
    )
    assert code == 0
    assert out == ""
    H = parse_edge_list(target.read_text())
    assert all(e & {0, 1} for e in H.edges)


def test_construct_infeasible(capsys):
    code, _, err = run(
        capsys, "construct", "--variant", "minimal", "--n", "2", "--k", "4",
        "--lengths", "3,3",
    )
    assert code == 2
    assert "error" in err


def test_check_finds_planted_family(tmp_path, capsys):
    cyc1 = build_linear_cycle(3, 3)
    cyc2 = [frozenset(v + 6 for v in e) for e in build_linear_cycle(3, 3)]
    H = new_hypergraph(12, 3, list(cyc1) + cyc2)
    hostfile = tmp_path / "two.txt"
    hostfile.write_text(write_edge_list(H))
    code, out, _ = run(
        capsys, "check", "--in", str(hostfile),
        "--spec", "linear:3+linear:3", "--reproducible",
    )
    assert code == 0
    verdict = json.loads(out)
    assert verdict["found"] is True
    assert len(verdict["witnesses"]) == 2
    assert verdict["witnesses"][0]["kind"] == "linear-cycle"


def test_check_missing_file(capsys):
    code, _, err = run(
        capsys, "check", "--in", "/nonexistent/host.txt", "--spec", "minimal:3",
    )
    assert code == 2


def test_check_bad_spec(tmp_path, capsys):
    hostfile = tmp_path / "h.txt"
    hostfile.write_text("3 6 1\n0 1 2\n")
    code, _, err = run(
        capsys, "check", "--in", str(hostfile), "--spec", "sideways:3",
    )
    assert code == 2


def test_check_parse_error(tmp_path, capsys):
    hostfile = tmp_path / "bad.txt"
    hostfile.write_text("3 6 1\n0 1\n")
    code, _, err = run(
        capsys, "check", "--in", str(hostfile), "--spec", "minimal:3",
    )
    assert code == 2
    assert "error" in err


def test_extract_success_json(tmp_path, capsys):
    cyc = build_linear_cycle(4, 3)
    H = new_hypergraph(9, 4, cyc)
    hostfile = tmp_path / "cyc.txt"
    hostfile.write_text(write_edge_list(H))
    code, out, _ = run(
        capsys, "extract", "--in", str(hostfile), "--spec", "linear:3",
        "--reproducible",
    )
    assert code == 0
    data = json.loads(out)
    assert data["found"] is True
    assert len(data["witnesses"]) == 1
    assert data["witnesses"][0]["length"] == 3
    assert "stage_seconds" not in data["trace"]
    assert data["trace"]["levels"][0]["length"] == 3


def test_extract_refusal_json(tmp_path, capsys):
    H = new_hypergraph(6, 3, [frozenset({0, 1, 2}), frozenset({3, 4, 5})])
    hostfile = tmp_path / "sparse.txt"
    hostfile.write_text(write_edge_list(H))
    code, out, _ = run(
        capsys, "extract", "--in", str(hostfile), "--spec", "minimal:3",
        "--reproducible",
    )
    assert code == 0
    data = json.loads(out)
    assert data["found"] is False
    assert data["stage"] == "first-cycle"


def test_extract_rejects_mixed_spec(tmp_path, capsys):
    hostfile = tmp_path / "h.txt"
    hostfile.write_text("3 6 1\n0 1 2\n")
    code, _, err = run(
        capsys, "extract", "--in", str(hostfile), "--spec", "minimal:3+linear:3",
    )
    assert code == 2
    assert "homogeneous" in err


def test_extract_rejects_berge_spec(tmp_path, capsys):
    hostfile = tmp_path / "h.txt"
    hostfile.write_text("3 6 1\n0 1 2\n")
    code, _, err = run(
        capsys, "extract", "--in", str(hostfile), "--spec", "berge-cycle:3",
    )
    assert code == 2


def test_search_json(capsys):
    code, out, _ = run(
        capsys, "search", "--n", "5", "--k", "4", "--spec", "minimal:3",
        "--reproducible",
    )
    assert code == 0
    data = json.loads(out)
    assert data["max_edges"] == 5
    assert data["exhaustive"] is True
    assert len(data["witness"]) == 5


def test_search_budget(capsys):
    code, out, _ = run(
        capsys, "search", "--n", "6", "--k", "3", "--spec", "minimal:3",
        "--max-nodes", "5", "--reproducible",
    )
    assert code == 0
    data = json.loads(out)
    assert data["exhaustive"] is False


def test_verify_tiny_grid_reports_and_fails(capsys):
    code, out, _ = run(capsys, "verify", "--grid", "tiny", "--reproducible")
    # Criterion 8 pins a reference value this library does not
    # reproduce, so the verify gate reports a failure.
    assert code == 1
    lines = out.strip().splitlines()
    assert lines[0] == "acceptance criteria"
    body = lines[1:-1]
    assert len(body) == 10
    assert sum(1 for l in body if l.startswith("PASS")) == 9
    assert sum(1 for l in body if l.startswith("FAIL")) == 1
    assert "criterion 8" in next(l for l in body if l.startswith("FAIL"))
    assert "[" not in out  # no timings under --reproducible
    assert "9 of 10 criteria passed" in lines[-1]


def test_verify_reproducible_is_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--grid", "tiny", "--reproducible")
    code2, out2, _ = run(capsys, "verify", "--grid", "tiny", "--reproducible")
    assert (code1, out1) == (code2, out2)


def test_usage_error_exit_code(capsys):
    assert main(["formula", "--variant", "bogus", "--n", "5", "--k", "3"]) == 2
    capsys.readouterr()


def test_no_command_exit_code(capsys):
    assert main([]) == 2
    capsys.readouterr()
