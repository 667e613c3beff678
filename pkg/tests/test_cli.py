"""CLI subcommands: outputs, exit codes, determinism."""

import json

import pytest

from eglocal.cli import main


@pytest.fixture()
def paw_file(tmp_path, paw):
    from eglocal import to_graph6

    path = tmp_path / "paw.g6"
    path.write_text(to_graph6(paw) + "\n")
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_weights_command(capsys, paw_file):
    code, out, _ = run(capsys, ["weights", paw_file])
    assert code == 0
    row = json.loads(out)
    assert row["p"] == [3, 3, 3, 3] and row["c"] == [3, 3, 3, 2] and row["circ"] == 3


def test_bounds_command(capsys, paw_file):
    code, out, _ = run(capsys, ["bounds", paw_file])
    assert code == 0
    row = json.loads(out)
    assert row["cycle_bound_halves"] == 8 and row["cycle_equality"] is True
    assert row["path_bound_halves"] == 12 and row["path_equality"] is False


def test_bounds_csv(capsys, paw_file):
    code, out, _ = run(capsys, ["bounds", "--csv", paw_file])
    assert code == 0
    header, row = out.strip().split("\n")
    assert header.startswith("graph6,n,m,path_bound_halves,cycle_bound_halves")
    cols = row.split(",")
    assert cols[1:5] == ["4", "4", "12", "8"]


def test_peel_command(capsys, tmp_path, chain33):
    from eglocal import to_graph6

    path = tmp_path / "c.g6"
    path.write_text(to_graph6(chain33) + "\n")
    code, out, _ = run(capsys, ["peel", str(path)])
    assert code == 0
    row = json.loads(out)
    assert row["totals"] == {"m": 7, "layer_sum_halves": 14, "bound_halves": 15}
    assert len(row["layers"]) == 3
    assert row["checks"]["ok"] is True


def test_blocks_command(capsys, paw_file):
    code, out, _ = run(capsys, ["blocks", paw_file])
    assert code == 0
    row = json.loads(out)
    assert row["blocks"] == [[0, 1, 2], [0, 3]]
    assert row["is_parent_dominated"] is True


def test_check_command(capsys, paw_file):
    code, out, _ = run(capsys, ["check", paw_file])
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_scan_command(capsys, tmp_path):
    corpus = tmp_path / "corpus.g6"
    code, out, _ = run(capsys, ["enumerate", "-n", "5"])
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 1024
    corpus.write_text("\n".join(lines) + "\n")

    code, out, _ = run(capsys, ["scan", "--quiet", str(corpus)])
    assert code == 0
    summary = json.loads(out.strip().split("\n")[-1])["summary"]
    assert summary["graphs_processed"] == 1024
    assert summary["inequality_violations"] == 0
    assert summary["characterization_mismatches"] == 0
    assert summary["path_equality_count"] == 52  # Bell(5) labeled clique unions
    assert "elapsed_seconds" not in summary


def test_scan_exit_code_on_violation(capsys, tmp_path, monkeypatch):
    # force a fabricated mismatch through the aggregation path
    from eglocal.scan import GraphVerdict

    fake = GraphVerdict(
        graph6="Bw", n=3, m=3,
        path_bound_halves=6, cycle_bound_halves=6,
        path_equality=True, cycle_equality=True,
        components_all_cliques=True, is_block_graph=True,
        is_parent_dominated=False,  # contradicts cycle_equality
    )
    monkeypatch.setattr(
        "eglocal.cli.scan_stream", lambda records, jobs, max_n: [(1, fake)]
    )
    corpus = tmp_path / "one.g6"
    corpus.write_text("Bw\n")
    code, out, _ = run(capsys, ["scan", "--quiet", str(corpus)])
    assert code == 1
    assert json.loads(out.strip().split("\n")[-1])["summary"][
        "characterization_mismatches"
    ] == 1


def test_scan_rows_deterministic(capsys, tmp_path):
    corpus = tmp_path / "corpus.g6"
    code, out, _ = run(capsys, ["enumerate", "-n", "3"])
    corpus.write_text(out)
    code, out1, _ = run(capsys, ["scan", "--csv", str(corpus)])
    code, out2, _ = run(capsys, ["scan", "--csv", str(corpus)])
    assert out1 == out2
    assert len(out1.strip().split("\n")) == 1 + 8 + 1  # header, rows, summary


def test_scan_jobs_matches_serial(capsys, tmp_path):
    corpus = tmp_path / "corpus.g6"
    code, out, _ = run(capsys, ["enumerate", "-n", "4"])
    corpus.write_text(out)
    _, serial, _ = run(capsys, ["scan", str(corpus)])
    _, parallel, _ = run(capsys, ["scan", "--jobs", "2", str(corpus)])
    assert serial == parallel


def test_malformed_input_names_line(capsys, tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("Bw\nB\n")
    code, _, err = run(capsys, ["weights", str(bad)])
    assert code == 2
    assert "line 2" in err


def test_max_n_guard(capsys, tmp_path):
    from eglocal import complete_graph, to_graph6

    f = tmp_path / "big.g6"
    f.write_text(to_graph6(complete_graph(8)) + "\n")
    code, _, err = run(capsys, ["weights", "--max-n", "7", str(f)])
    assert code == 2 and "exceeds" in err


def test_gen_families(capsys):
    code, out, _ = run(capsys, ["gen", "--family", "turan", "--n", "6", "--r", "3"])
    assert code == 0
    from eglocal import parse_graph6

    assert parse_graph6(out.strip()).edge_count() == 12

    code, out1, _ = run(
        capsys,
        ["gen", "--family", "gnp", "--n", "8", "--p", "0.4", "--seed", "5", "--count", "3"],
    )
    code, out2, _ = run(
        capsys,
        ["gen", "--family", "gnp", "--n", "8", "--p", "0.4", "--seed", "5", "--count", "3"],
    )
    assert out1 == out2 and len(out1.strip().split("\n")) == 3

    code, out, _ = run(
        capsys,
        ["gen", "--family", "parent-dominated", "--blocks", "3", "--max-order", "4", "--count", "2", "--seed", "1"],
    )
    assert code == 0
    from eglocal import decompose, parse_graph6

    for line in out.strip().split("\n"):
        assert decompose(parse_graph6(line)).is_parent_dominated


def test_enumerate_cap(capsys):
    code, _, err = run(capsys, ["enumerate", "-n", "9"])
    assert code == 2 and "capped" in err


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("Bw\n"))
    code, out, _ = run(capsys, ["weights", "-"])
    assert code == 0 and json.loads(out)["n"] == 3
