import subprocess
import sys

import pytest

from queuelab.cli import main


@pytest.fixture
def rainbow_file(tmp_path):
    p = tmp_path / "r.txt"
    p.write_text("6\n1 6\n2 5\n3 4\n")
    return str(p)


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.txt"
    p.write_text("4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rainbow(capsys, rainbow_file):
    code, out, _ = run(capsys, "rainbow", "--graph", rainbow_file)
    assert code == 0
    assert out.splitlines()[0] == "3"
    assert "(1,6) (2,5) (3,4)" in out


def test_partition(capsys, rainbow_file):
    code, out, _ = run(capsys, "partition", "--graph", rainbow_file)
    assert code == 0 and "k=3" in out and "queue 3: (1,6)" in out


def test_queue_number_exact(capsys, k4_file):
    code, out, _ = run(capsys, "queue-number", "--graph", k4_file, "--exact")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "2" and lines[1] == "exact: yes"
    assert lines[2].startswith("order: ")


def test_queue_number_heuristic(capsys, k4_file):
    code, out, _ = run(capsys, "queue-number", "--graph", k4_file, "--restarts", "3", "--seed", "1")
    assert code == 0 and out.splitlines()[0] == "2" and "upper bound" in out


def test_census_variants(capsys, tmp_path):
    cache = str(tmp_path / "c.cache")
    assert run(capsys, "census", "--n", "3", "--cache", cache)[1].startswith("g(3) = 48")
    assert run(capsys, "census", "--n", "2", "--m", "3", "--cache", cache)[1].startswith("g(2,3) = 1")
    assert run(capsys, "census", "--n", "3", "--m", "6", "--k", "2", "--cache", cache)[1].startswith("g(3,6,2) = 1")
    assert "= 3" in run(capsys, "census", "--n", "2", "--sizes", "1,1")[1]
    assert ": 1" in run(capsys, "census", "--n", "4", "--m", "6", "--k", "2", "--labelled", "--cache", cache)[1]
    assert ": 70" in run(capsys, "census", "--n", "6", "--delta", "3", "--cache", cache)[1]
    assert len(open(cache).read().splitlines()) == 5


def test_census_env_cache(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("QUEUELAB_CACHE", str(tmp_path / "env.cache"))
    run(capsys, "census", "--n", "2")
    assert (tmp_path / "env.cache").exists()


def test_census_limit_is_usage_error(capsys, tmp_path):
    code, _, err = run(capsys, "census", "--n", "9", "--cache", str(tmp_path / "c"))
    assert code == 2 and "limit" in err


def test_verify_lemmas_subset(capsys):
    code, out, _ = run(capsys, "verify", "lemmas", "--max-n", "3", "--only", "max-edges,doubling-patterns,doubling")
    assert code == 0
    assert out.count("PASS") == 3


def test_verify_failure_exits_nonzero(capsys, monkeypatch):
    from queuelab import verify
    from queuelab.verify import CheckResult
    monkeypatch.setitem(verify.CHECKS, "theorem", lambda n: CheckResult("theorem", False, "forced", "delta=3 n=1"))
    code, out, _ = run(capsys, "verify", "lemmas", "--only", "theorem")
    assert code == 1
    assert "COUNTEREXAMPLE\ttheorem\tdelta=3 n=1" in out


def test_verify_unknown_check(capsys):
    assert run(capsys, "verify", "lemmas", "--only", "bogus")[0] == 2


def test_max_edges(capsys):
    code, out, _ = run(capsys, "max-edges", "--n", "3")
    assert code == 0 and out.splitlines()[0] == "5" and "edge sums: 2 3 4 5 6" in out


def test_doubling_patterns(capsys):
    assert run(capsys, "doubling-patterns")[1].splitlines()[0] == "11"
    assert run(capsys, "doubling-patterns", "--loop")[1].splitlines()[0] == "7"


def test_gen_regular_roundtrip(capsys, tmp_path):
    from queuelab.core import parse_graph
    from queuelab.randreg import degree_check
    code, out, _ = run(capsys, "gen-regular", "--n", "10", "--delta", "3", "--seed", "4")
    assert code == 0
    assert degree_check(parse_graph(out, kind="labelled"), 3)
    assert run(capsys, "gen-regular", "--n", "5", "--delta", "3", "--seed", "4")[0] == 2


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "1000", "--delta", "3", "--k", "20")
    assert code == 0
    assert "theorem lower bound        = 3.162278" in out
    assert "solve_min_k (n^n)          = 4" in out
    assert "ln k-queue count bound" in out


def test_bounds_out_of_range(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "10", "--delta", "3", "--k", "1")
    assert code == 0 and "outside the range" in out


def test_experiment_csv_and_svg(capsys, tmp_path):
    out_a, out_b, svg = tmp_path / "a.csv", tmp_path / "b.csv", tmp_path / "p.svg"
    args = ["experiment", "--delta", "3", "--n-list", "4,6", "--samples", "2", "--seed", "7"]
    assert run(capsys, *args, "--out", str(out_a), "--svg", str(svg))[0] == 0
    assert run(capsys, *args, "--out", str(out_b))[0] == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    assert svg.read_text().startswith("<svg")


def test_bad_graph_file(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3\n1 2\n2 1\n")
    code, _, err = run(capsys, "rainbow", "--graph", str(p))
    assert code == 2 and "line 3" in err


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["queue-number"])
    assert exc.value.code == 2


def test_module_entry_point(rainbow_file):
    res = subprocess.run([sys.executable, "-m", "queuelab.cli", "rainbow", "--graph", rainbow_file],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("3\n")
