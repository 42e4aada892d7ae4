"""Command line contract: output shapes and stable exit codes."""

import json

import pytest

from absgraph.canon import is_isomorphic
from absgraph.cli import main
from absgraph.families import build_knp, build_turan
from absgraph.graph import from_graph6


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_path_edge_list(capsys, tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text("4\n0 1\n1 2\n2 3\n")
    code, out, _ = run(capsys, "compute", str(f))
    assert code == 0
    assert out.strip() == "1.86180731957"


def test_compute_k2_is_zero(capsys, tmp_path):
    f = tmp_path / "k2.g6"
    f.write_text("A_\n")
    code, out, _ = run(capsys, "compute", str(f))
    assert code == 0
    assert out.strip() == "0"


def test_compute_many_graph6_lines(capsys, tmp_path):
    f = tmp_path / "batch.g6"
    f.write_text("A_\nBw\nC~\n")
    code, out, _ = run(capsys, "compute", str(f))
    assert code == 0
    assert len(out.strip().splitlines()) == 3


def test_compute_malformed_input(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("not a graph\n")
    code, _, err = run(capsys, "compute", str(f))
    assert code == 2
    assert "error" in err


def test_compute_empty_input(capsys, tmp_path):
    f = tmp_path / "empty.txt"
    f.write_text("\n")
    code, _, err = run(capsys, "compute", str(f))
    assert code == 2


def test_build_knp(capsys):
    code, out, _ = run(capsys, "build", "knp", "--n", "5", "--p", "1")
    assert code == 0
    assert is_isomorphic(from_graph6(out.strip()), build_knp(5, 1))


def test_build_turan_edges(capsys):
    code, out, _ = run(capsys, "build", "turan", "--n", "7", "--k", "3",
                       "--format", "edges")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "7"
    assert len(lines) - 1 == build_turan(7, 3).m


def test_build_kappa_xy_closed_form(capsys):
    code, out, _ = run(capsys, "build", "kappa-xy", "--x", "4", "--y", "2",
                       "--kappa", "1", "--closed-form")
    assert code == 0
    graph_line, value_line = out.strip().splitlines()
    assert from_graph6(graph_line).n == 8
    assert value_line == "11.0418322339"


def test_build_rejects_bad_parameters(capsys):
    code, _, err = run(capsys, "build", "knp", "--n", "4", "--p", "3")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "build", "sixpart", "--parts", "1,2,3")
    assert code == 2
    code, _, err = run(capsys, "build", "multipartite", "--parts", "2,x")
    assert code == 2


def test_enumerate_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5")
    assert code == 0
    assert len(out.strip().splitlines()) == 21
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--bipartite")
    assert len(out.strip().splitlines()) == 5


def test_enumerate_filters(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--p", "3")
    assert code == 0
    assert len(out.strip().splitlines()) == 1  # only the path
    code, out, _ = run(capsys, "enumerate", "--n", "6", "--kappa", "3")
    assert len(out.strip().splitlines()) == 1  # only K_{3,3}
    code, _, err = run(capsys, "enumerate", "--n", "5", "--p", "1", "--kappa", "1")
    assert code == 2


def test_enumerate_envelope(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "10")
    assert code == 2 and "error" in err


def test_verify_single_cell(capsys):
    code, out, _ = run(capsys, "verify", "bipartite-kappa", "--n", "7",
                       "--kappa", "3")
    assert code == 0
    assert "confirmed" in out


def test_verify_all_p_writes_report(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "cut-vertices", "--n", "6", "--all-p",
                       "--report", str(report))
    assert code == 0
    assert out.count("confirmed") == 5
    parsed = json.loads(report.read_text())
    assert [cell["verdict"] for cell in parsed] == ["confirmed"] * 5


def test_verify_descriptive_exits_one(capsys):
    code, out, _ = run(capsys, "verify", "bipartite-kappa", "--n", "6",
                       "--kappa", "1")
    assert code == 1
    assert "descriptive" in out


def test_verify_vacuous_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "cut-vertices", "--n", "5", "--p", "4")
    assert code == 0
    assert "vacuous" in out


def test_verify_requires_parameters(capsys):
    code, _, err = run(capsys, "verify", "cut-vertices", "--n", "6")
    assert code == 2
    code, _, err = run(capsys, "verify", "k-partiteness", "--n", "6", "--k", "2")
    assert code == 2
    code, _, err = run(capsys, "verify", "cut-vertices", "--p", "1")
    assert code == 2


def test_verify_report_bytes_stable_across_workers(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "verify", "k-partiteness", "--n", "6", "--k", "2", "--r", "1",
        "--report", str(a), "--workers", "1")
    run(capsys, "verify", "k-partiteness", "--n", "6", "--k", "2", "--r", "1",
        "--report", str(b), "--workers", "2")
    assert a.read_bytes() == b.read_bytes()


def test_lemma_check_pass(capsys):
    code, out, _ = run(capsys, "lemma-check", "kappa-shift", "--n-max", "12")
    assert code == 0
    assert "pass" in out


def test_lemma_check_alias(capsys):
    code, out, _ = run(capsys, "lemma-check", "fil2", "--n-max", "10")
    assert code == 0
    assert "balanced-step" in out


def test_lemma_check_unknown_id(capsys):
    code, _, err = run(capsys, "lemma-check", "nosuch")
    assert code == 2 and "unknown lemma id" in err


def test_lemma_check_report(capsys, tmp_path):
    report = tmp_path / "lemma.json"
    code, _, _ = run(capsys, "lemma-check", "zeta-monotone", "--n-max", "15",
                     "--report", str(report))
    assert code == 0
    parsed = json.loads(report.read_text())
    assert parsed[0]["lemma"] == "zeta-monotone"
    assert parsed[0]["verdict"] == "pass"


def test_table_markdown(capsys):
    code, out, _ = run(capsys, "table", "--n-min", "7", "--n-max", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("| class")
    assert any("K_7^2" in line for line in lines)
    assert any("bipartite-kappa" in line for line in lines)


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--n-min", "7", "--n-max", "7",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "class,n,params,extremal graph,ABS"
    assert all(line.count(",") >= 4 for line in lines[1:])


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--format", "bogus"])
    assert exc.value.code == 2
