import csv
import io
import json
import subprocess
import sys

import pytest

from helpers import EXAMPLE_NAMES, build_example
from orderedmim import parse_graph, parse_ordering, serialize_graph, serialize_ordering
from orderedmim.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


@pytest.fixture
def example_files(tmp_path):
    g, sigma = build_example()
    graph = tmp_path / "example.txt"
    graph.write_text(serialize_graph(g))
    order = tmp_path / "sigma.txt"
    order.write_text(serialize_ordering(sigma))
    names = tmp_path / "names.txt"
    names.write_text("".join(f"{i} {x}\n" for i, x in enumerate(EXAMPLE_NAMES)))
    return graph, order, names


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_mim_example_with_names(capsys, example_files):
    graph, order, names = example_files
    code, out = run_json(capsys, "mim", "--graph", str(graph), "--ordering", str(order), "--names", str(names))
    assert code == 0
    assert out == {"weight": 7.0, "matching": [["a", "b"], ["u", "v"]], "ordering_source": "given"}


def test_mim_computes_ordering(capsys, example_files):
    graph, _, _ = example_files
    code, out = run_json(capsys, "mim", "--graph", str(graph))
    assert code == 0 and out["weight"] == 7.0 and out["ordering_source"] == "computed"


def test_mim_unweighted_p5(capsys, tmp_path):
    path = write(tmp_path, "p5.txt", "5 4\n0 1 3\n1 2\n2 3\n3 4\n")
    code, out = run_json(capsys, "mim", "--graph", path, "--unweighted")
    assert code == 0 and out["weight"] == 2.0 and out["matching"] == [[0, 1], [3, 4]]


def test_mim_edgeless(capsys, tmp_path):
    code, out = run_json(capsys, "mim", "--graph", write(tmp_path, "e.txt", "3 0\n"))
    assert code == 0 and out["weight"] == 0.0 and out["matching"] == []


def test_mim_not_cocomparability(capsys, tmp_path):
    path = write(tmp_path, "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out = run_json(capsys, "mim", "--graph", path)
    assert code == 1 and "error" in out


def test_mim_bad_ordering(capsys, tmp_path):
    graph = write(tmp_path, "g.txt", "3 1\n0 2\n")
    order = write(tmp_path, "o.txt", "0 1 2\n")
    code, out = run_json(capsys, "mim", "--graph", graph, "--ordering", order)
    assert code == 1 and out["witness"] == [0, 1, 2]


def test_malformed_graph_exit_2(capsys, tmp_path):
    code, out, err = run(capsys, "mim", "--graph", write(tmp_path, "bad.txt", "2 1\n0 0\n"))
    assert code == 2 and out == "" and "error" in json.loads(err)


def test_missing_file_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "mim", "--graph", str(tmp_path / "missing.txt"))
    assert code == 2 and "cannot read" in json.loads(err)["error"]


def test_unknown_class_exit_2(capsys):
    code, _, _ = run(capsys, "gen", "--class", "bipartite", "-n", "4")
    assert code == 2


def test_gen_is_deterministic(capsys, tmp_path):
    for i in range(2):
        assert main(["gen", "--class", "interval", "-n", "30", "--seed", "4", "--weighted",
                     "--graph", str(tmp_path / f"g{i}.txt"), "--ordering", str(tmp_path / f"o{i}.txt")]) == 0
    capsys.readouterr()
    assert (tmp_path / "g0.txt").read_bytes() == (tmp_path / "g1.txt").read_bytes()
    assert (tmp_path / "o0.txt").read_bytes() == (tmp_path / "o1.txt").read_bytes()
    g = parse_graph((tmp_path / "g0.txt").read_text())
    parse_ordering((tmp_path / "o0.txt").read_text(), g.n)


def test_gen_inline_output_verifies(capsys, tmp_path):
    code, out = run_json(capsys, "gen", "--class", "split", "-n", "12", "--seed", "2")
    assert code == 0 and out["class"] == "split"
    graph = write(tmp_path, "g.txt", out["graph"])
    order = write(tmp_path, "o.txt", " ".join(map(str, out["ordering"])))
    code, res = run_json(capsys, "verify", "--graph", graph, "--ordering", order, "--class", "split")
    assert code == 0 and res == {"ok": True, "witness": None, "pattern": None}


def test_verify_failure(capsys, tmp_path):
    graph = write(tmp_path, "g.txt", "3 1\n0 2\n")
    order = write(tmp_path, "o.txt", "0 1 2")
    code, out = run_json(capsys, "verify", "--graph", graph, "--ordering", order, "--class", "cocomparability")
    assert code == 1 and out == {"ok": False, "witness": [0, 1, 2], "pattern": "p4"}


def test_verify_needs_ordering(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", "--graph", write(tmp_path, "g.txt", "1 0"), "--class", "chordal")
    assert code == 2


def test_order_l2_example(capsys, example_files):
    graph, order, _ = example_files
    code, out = run_json(capsys, "order-l2", "--graph", str(graph), "--ordering", str(order),
                         "--endpoints", "--check")
    assert code == 0 and out["transfer_ok"]
    names = ["".join(sorted(EXAMPLE_NAMES[u] + EXAMPLE_NAMES[v])) for u, v in out["order"]]
    assert names == ["ab", "be", "de", "bc", "cd", "cu", "uv"]
    assert {r["pattern"] for r in out["check"]} == {"p1", "p2", "p3", "p4", "p5"}


@pytest.mark.parametrize("rule", ["star", "bullet"])
def test_order_l2_out_file(capsys, example_files, tmp_path, rule):
    graph, order, _ = example_files
    dest = tmp_path / "pi.txt"
    code, out = run_json(capsys, "order-l2", "--graph", str(graph), "--ordering", str(order),
                         "--rule", rule, "--out", str(dest), "--class", "cocomparability", "--check")
    assert code == 0 and out["out"] == str(dest)
    assert dest.read_text().split() == ["0", "1", "2", "3", "4", "5", "6"]


def test_mwis(capsys, tmp_path):
    graph = write(tmp_path, "p3.txt", "3 2\n0 1\n1 2\n")
    weights = write(tmp_path, "w.txt", "0 1\n1 5\n2 1\n")
    names = write(tmp_path, "n.txt", "0 x\n1 y\n2 z\n")
    code, out = run_json(capsys, "mwis", "--graph", graph, "--weights", weights, "--names", names)
    assert code == 0 and out == {"weight": 5.0, "vertices": ["y"], "ordering_source": "computed"}


def test_oracle(capsys, example_files, tmp_path):
    graph, order, _ = example_files
    code, out = run_json(capsys, "oracle", "--graph", str(graph), "--ordering", str(order))
    assert code == 0 and out["agree"] is True and out["brute"]["weight"] == 7.0
    c5 = write(tmp_path, "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out = run_json(capsys, "oracle", "--graph", c5, "--problem", "mwis")
    assert code == 0 and out["brute"]["weight"] == 2.0 and out["fast"] is None


def test_oracle_size_limit(capsys, tmp_path):
    edges = "\n".join(f"{u} {v}" for u in range(9) for v in range(u + 1, 9))
    code, _, err = run(capsys, "oracle", "--graph", write(tmp_path, "k9.txt", f"9 36\n{edges}\n"))
    assert code == 2 and "limited" in json.loads(err)["error"]


def test_compare(capsys):
    code, out = run_json(capsys, "compare", "--trials", "25", "--n-max", "9", "--seed", "3")
    assert code == 0 and out["passed"] == 25 and out["first_counterexample"] is None
    assert out["mim_oracle_checks"] > 0


def test_compare_parallel_matches_serial(capsys):
    args = ["compare", "--class", "chordal", "--trials", "8", "--n-max", "8", "--seed", "5"]
    _, serial = run_json(capsys, *args)
    _, parallel = run_json(capsys, *args, "--jobs", "2")
    assert serial == parallel


def test_compare_zero_trials(capsys):
    code, out = run_json(capsys, "compare", "--trials", "0")
    assert code == 0 and out["trials"] == 0


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "50,100", "--csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["algo"] for r in rows] == ["star_order", "ccwmis", "ccwmim"] * 2
    assert all(float(r["ratio"]) <= 4 for r in rows)


def test_bench_empty_sizes(capsys):
    code, out = run_json(capsys, "bench", "--sizes", "")
    assert code == 0 and out == []


def test_pretty_output(capsys, example_files):
    graph, order, _ = example_files
    code, out, _ = run(capsys, "mim", "--graph", str(graph), "--ordering", str(order), "--pretty")
    assert code == 0 and out.startswith("weight  7.0")


def test_module_entry_point(example_files):
    graph, _, _ = example_files
    proc = subprocess.run([sys.executable, "-m", "orderedmim", "mim", "--graph", str(graph)],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["weight"] == 7.0
