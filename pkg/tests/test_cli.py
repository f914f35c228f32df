import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from blockconn import generate, oracle_components, validate_adjacency
from blockconn.cli import main
from blockconn.generators import GraphSpec
from blockconn.io import emit_dense, emit_edge_list, parse_dense, parse_graph

from brute import permute_by_product
from conftest import PAPER_A, PAPER_A_PRIME_TEXT


@pytest.fixture
def paper_file(tmp_path):
    p = tmp_path / "paper.edges"
    p.write_text("n 5\n1 2\n1 4\n2 4\n3 5\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestAnalyze:
    def test_paper(self, capsys, paper_file):
        code, out, _ = run(capsys, "analyze", paper_file)
        assert code == 1
        assert out.splitlines()[0] == "disconnected"
        assert "2 components: {1,2,4}, {3,5}" in out
        assert "l = 2, r = 0" in out

    def test_single_edge(self, capsys, tmp_path):
        p = tmp_path / "e.edges"
        p.write_text("1 2\n")
        code, out, _ = run(capsys, "analyze", str(p))
        assert code == 0 and out.startswith("connected")

    def test_malformed(self, capsys, tmp_path):
        p = tmp_path / "bad.edges"
        p.write_text("n 3\n1 banana\n")
        code, _, err = run(capsys, "analyze", str(p))
        assert code == 2 and "line 2" in err

    def test_missing_file_and_bad_flag(self, capsys, tmp_path):
        assert run(capsys, "analyze", str(tmp_path / "nope"))[0] == 2
        assert run(capsys, "analyze", "--output", "xml", "x")[0] == 2

    def test_json_and_trace(self, capsys, paper_file):
        code, out, _ = run(capsys, "analyze", paper_file, "-o", "json", "--trace")
        doc = json.loads(out)
        assert code == 1
        assert doc["components"] == [[1, 2, 4], [3, 5]]
        assert doc["boundaries"] == [0, 3, 5]
        assert [t["step"] for t in doc["trace"]].count("D11") == 2

    def test_isolated_listed(self, capsys, tmp_path):
        p = tmp_path / "iso.edges"
        p.write_text("n 4\n1 2\n")
        code, out, _ = run(capsys, "analyze", str(p))
        assert code == 1
        assert "isolated vertices: 3 4" in out or "isolated vertices: 4 3" in out
        assert "3 components" in out

    def test_symmetrize(self, capsys, tmp_path):
        p = tmp_path / "half.dense"
        p.write_text("0 1\n0 0\n")
        assert run(capsys, "analyze", str(p))[0] == 2
        assert run(capsys, "analyze", str(p), "--symmetrize")[0] == 0

    def test_stdin(self, paper_file):
        with open(paper_file) as fh:
            proc = subprocess.run(
                [sys.executable, "-m", "blockconn.cli", "analyze", "-", "--format", "edges"],
                stdin=fh, capture_output=True, text=True,
            )
        assert proc.returncode == 1
        assert "2 components: {1,2,4}, {3,5}" in proc.stdout


class TestPermute:
    def test_paper(self, capsys, paper_file):
        code, out, _ = run(capsys, "permute", paper_file)
        assert code == 0
        assert out.startswith(PAPER_A_PRIME_TEXT + "\n")
        assert "label_at: 1 2 4 5 3" in out

    def test_sorted_k3_identity(self, capsys, tmp_path):
        p = tmp_path / "k3.dense"
        p.write_text("0 1 1\n1 0 1\n1 1 0\n")
        code, out, _ = run(capsys, "permute", str(p))
        assert out.startswith("0 1 1\n1 0 1\n1 1 0\n")
        assert "label_at: 1 2 3" in out

    def test_witness_recomputed(self, capsys, tmp_path):
        m = generate(GraphSpec("erdos_renyi", n=30, p=0.06, seed=4))
        p = tmp_path / "g.edges"
        p.write_text(emit_edge_list(m))
        code, out, _ = run(capsys, "permute", str(p), "-o", "json")
        doc = json.loads(out)
        label_at = [v - 1 for v in doc["label_at"]]
        assert doc["permuted_matrix"] == permute_by_product(m.tolist(), label_at)


class TestVerify:
    def test_paper(self, capsys, paper_file):
        assert run(capsys, "verify", paper_file)[0] == 0
        assert run(capsys, "verify", paper_file, "--oracle", "bfs")[0] == 0

    def test_null(self, capsys, tmp_path):
        p = tmp_path / "null.edges"
        p.write_text("n 6\n")
        assert run(capsys, "verify", str(p))[0] == 0

    def test_fuzz_1000(self, capsys):
        code, out, _ = run(capsys, "verify", "--fuzz", "1000", "--seed", "1000")
        assert code == 0
        assert out.strip() == "1000/1000 graphs agree with union_find"

    def test_needs_input(self, capsys):
        assert run(capsys, "verify")[0] == 2


class TestGenerate:
    def test_planted(self, capsys):
        code, out, _ = run(capsys, "generate", "planted_components", "--sizes", "3,2", "--density", "1")
        m = parse_graph(out)
        assert code == 0 and m.n == 5
        assert oracle_components(m).sizes() == [2, 3]

    def test_null_base_case(self, capsys):
        code, out, _ = run(capsys, "generate", "null", "--n", "2", "--to", "dense")
        assert out == "0 0\n0 0\n"

    def test_complete(self, capsys):
        code, out, _ = run(capsys, "generate", "complete", "--n", "3", "--to", "dense")
        assert out == "0 1 1\n1 0 1\n1 1 0\n"

    def test_recipe_and_file_output(self, capsys, tmp_path):
        recipe = tmp_path / "r.json"
        recipe.write_text(GraphSpec("cycle", n=7, seed=3).to_json())
        target = tmp_path / "out.mtx"
        assert run(capsys, "generate", "--recipe", str(recipe), "--to", "mtx", "--out", str(target))[0] == 0
        m = parse_graph(target.read_text(), name=str(target))
        assert m == generate(GraphSpec("cycle", n=7, seed=3))

    def test_deterministic_bytes(self, capsys):
        a = run(capsys, "generate", "erdos_renyi", "--n", "20", "--p", "0.2", "--seed", "5")[1]
        b = run(capsys, "generate", "erdos_renyi", "--n", "20", "--p", "0.2", "--seed", "5")[1]
        assert a == b

    def test_invalid(self, capsys):
        assert run(capsys, "generate", "cycle", "--n", "2")[0] == 2
        assert run(capsys, "generate")[0] == 2


class TestBench:
    def test_csv_shape(self, capsys):
        code, out, _ = run(capsys, "bench", "--sizes", "20,40", "--families", "dense,path", "--repeat", "1")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        assert out.splitlines()[0] == "n,family,algd_ms,oracle_ms,swaps"
        assert {(r["n"], r["family"]) for r in rows} == {("20", "dense"), ("20", "path"), ("40", "dense"), ("40", "path")}
        assert all(int(r["swaps"]) <= int(r["n"]) for r in rows)

    def test_unknown_family(self, capsys):
        assert run(capsys, "bench", "--sizes", "10", "--families", "weird")[0] == 2


def test_superlinear_growth_on_dense():
    from blockconn.bench import growth_exponent, run_bench

    rows = run_bench([100, 200, 400, 800], ["dense"], repeat=3, backend="python")
    assert growth_exponent(rows, "dense") > 1.0
