import io
import json
import subprocess
import sys

import pytest

from convexia.cli import main
from convexia.graph import Graph, load_graph, serialize_graph


def run_cli(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_graph6_auto(tmp_path, capsys, monkeypatch):
    p6 = Graph(6, [(i, i + 1) for i in range(5)])
    f = tmp_path / "g.g6"
    f.write_text(serialize_graph(p6) + "\n")
    code, out, err = run_cli(capsys, monkeypatch,
                             ["compute", str(f), "-k", "g"])
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "convexia/1"
    assert report["n"] == 6 and report["m_edges"] == 5
    assert report["value"] == 2 and report["witness"] == [0, 5]
    assert report["class_detected"] == "tree"
    assert report["algorithm_used"] == "tree"
    assert report["wall_ms"] >= 0


def test_compute_edges_from_stdin(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch,
                           ["compute", "--format", "edges", "-k", "g2"],
                           stdin="n=4\n0 1\n1 2\n2 3\n")
    assert code == 0
    report = json.loads(out)
    assert report["value"] == 3
    assert report["kind"] == "g2"


def test_compute_perm_monophonic(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch,
                           ["compute", "--format", "perm", "-k", "m"],
                           stdin="2 4 1 3\n")
    assert code == 0
    report = json.loads(out)
    assert report["value"] == 2
    assert report["algorithm_used"] == "permutation"


def test_compute_complement_flag(capsys, monkeypatch):
    # complement of P4 is P4
    p4 = serialize_graph(Graph(4, [(0, 1), (1, 2), (2, 3)]))
    code, out, _ = run_cli(capsys, monkeypatch,
                           ["compute", "-k", "g", "--complement"],
                           stdin=p4 + "\n")
    assert code == 0
    assert json.loads(out)["value"] == 2


def test_compute_oracle_override(capsys, monkeypatch):
    p6 = serialize_graph(Graph(6, [(i, i + 1) for i in range(5)]))
    code, out, _ = run_cli(capsys, monkeypatch,
                           ["compute", "-k", "g", "-a", "oracle"],
                           stdin=p6 + "\n")
    assert code == 0
    assert json.loads(out)["algorithm_used"] == "oracle"


def test_parse_error_exit_2(capsys, monkeypatch):
    code, out, err = run_cli(capsys, monkeypatch, ["compute"],
                             stdin="@@notgraph6@@\n")
    assert code == 2
    assert err.startswith("error:")


def test_domain_error_exit_3(capsys, monkeypatch):
    c4 = serialize_graph(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    code, _, err = run_cli(capsys, monkeypatch,
                           ["compute", "-k", "g", "-a", "tree"],
                           stdin=c4 + "\n")
    assert code == 3
    assert "tree" in err


def test_budget_error_exit_4(capsys, monkeypatch):
    big = serialize_graph(Graph(25, [(i, i + 1) for i in range(24)]))
    code, _, err = run_cli(capsys, monkeypatch,
                           ["compute", "-k", "s", "-a", "oracle",
                            "--cap", "16"],
                           stdin=big + "\n")
    assert code == 4


def test_generate_figure1_and_compute(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch, ["generate", "figure1"])
    assert code == 0
    g = load_graph(out.strip())
    assert g.n == 9
    code, out, _ = run_cli(capsys, monkeypatch,
                           ["compute", "-k", "s"], stdin=out)
    assert json.loads(out)["value"] == 5


def test_generate_deterministic_under_seed(capsys, monkeypatch):
    a = run_cli(capsys, monkeypatch,
                ["generate", "random-tree", "--size", "15", "--seed", "7"])
    b = run_cli(capsys, monkeypatch,
                ["generate", "random-tree", "--size", "15", "--seed", "7"])
    c = run_cli(capsys, monkeypatch,
                ["generate", "random-tree", "--size", "15", "--seed", "8"])
    assert a[1] == b[1] != c[1]


def test_generate_random_perm(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch,
                           ["generate", "random-perm", "--size", "6",
                            "--seed", "1"])
    assert code == 0
    assert sorted(int(t) for t in out.split()) == [1, 2, 3, 4, 5, 6]


def test_generate_spider_and_cm_reduction(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch,
                           ["generate", "spider", "--feet", "3"])
    assert code == 0
    g = load_graph(out.strip())
    assert g.n == 6
    code, out2, _ = run_cli(capsys, monkeypatch,
                            ["generate", "cm-reduction"], stdin=out)
    assert code == 0
    assert load_graph(out2.strip()).n == 8


def test_verify_subcommand(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch,
                           ["verify", "dp-vs-oracle", "--cases", "5"])
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "dp-vs-oracle"
    assert report["failures"] == []
    assert report["schema"] == "convexia/1"


def test_console_script_entry_point():
    out = subprocess.run(["convexia", "--version"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip()
