import json
from pathlib import Path

import pytest
from hypothesis import given

from holeforge import io
from holeforge.cli import main
from holeforge.graph import complete_graph, cycle_graph, make_graph
from holeforge.decomposition import Coloring

from conftest import graphs

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


# --- DIMACS ----------------------------------------------------------------


def test_parse_k2():
    assert io.parse_dimacs("p edge 2 1\ne 1 2\n") == complete_graph(2)


def test_self_loop_rejected():
    with pytest.raises(io.DimacsError, match="self-loop"):
        io.parse_dimacs("p edge 2 1\ne 1 1\n")


@pytest.mark.parametrize(
    "text",
    [
        "e 1 2\n",
        "p edge 2 2\ne 1 2\n",
        "p edge 2 1\ne 1 3\n",
        "p edge 2 1\ne 1\n",
        "p edge x 1\n",
        "q\n",
        "",
    ],
)
def test_malformed(text):
    with pytest.raises(io.DimacsError):
        io.parse_dimacs(text)


def test_comments_and_order_normalised():
    text = "c hello\np edge 3 2\ne 3 2\ne 2 1\n"
    assert io.write_dimacs(io.parse_dimacs(text)) == "p edge 3 2\ne 1 2\ne 2 3\n"


@given(graphs(max_n=9))
def test_round_trip(G):
    text = io.write_dimacs(G)
    assert io.parse_dimacs(text) == G
    assert io.write_dimacs(io.parse_dimacs(text)) == text


def test_solution_round_trip():
    c = Coloring({0: 2, 1: 0, 2: 2})
    assert io.parse_solution(io.write_solution(c)) == c.normalized()


# --- subcommands ----------------------------------------------------------


def test_classify_c8(capsys):
    code, out, _ = run(capsys, "classify", DATA / "c8.col")
    rep = json.loads(out)
    assert code == 0 and rep["schema"] == 1 and rep["member"] is False
    assert rep["patterns"]["4K1"]["vertices"] == [1, 3, 5, 7]


def test_color_c7(capsys):
    code, out, _ = run(capsys, "color", "--mode", "pipeline", DATA / "c7.col")
    assert code == 0
    col = io.parse_solution(out)
    assert col.count == 3 and col.is_proper(cycle_graph(7))


def test_color_trace(capsys, tmp_path):
    trace = tmp_path / "t.json"
    code, _, _ = run(capsys, "color", DATA / "c5_twin.col", "--trace", trace)
    t = json.loads(trace.read_text())
    assert code == 0 and t["schema"] == 1
    assert [a["branch"] for a in t["atoms"]] == ["fallback-exact"]


def test_color_out_of_class(capsys):
    code, out, _ = run(capsys, "color", DATA / "c8.col")
    assert code == 3 and json.loads(out)["witness"]["pattern"] == "4K1"


def test_color_exact_ignores_class(capsys):
    code, out, _ = run(capsys, "color", "--mode", "exact", DATA / "c8.col")
    assert code == 0 and io.parse_solution(out).count == 2


def test_audit_c7_x1(capsys):
    code, out, _ = run(capsys, "audit", "--hole", "c7", DATA / "c7_x1.col")
    rep = json.loads(out)
    assert code == 0 and rep["ok"] and all(c["status"] == "pass" for c in rep["claims"])


def test_audit_failing_claim(capsys, tmp_path):
    # in class would forbid this, so membership is checked first
    G = make_graph(9, [(i, (i + 1) % 7) for i in range(7)] + [(7, 0), (7, 1), (7, 2), (8, 2), (8, 3), (8, 6), (7, 8)])
    f = tmp_path / "bad.col"
    f.write_text(io.write_dimacs(G))
    code, out, _ = run(capsys, "audit", "--hole", "c7", f)
    assert code == 3


def test_audit_missing_hole(capsys):
    code, out, _ = run(capsys, "audit", "--hole", "c5", DATA / "c7.col")
    assert code == 3


def test_partition(capsys):
    code, out, _ = run(capsys, "partition", "--hole", "c7", DATA / "c7_x1.col")
    rep = json.loads(out)
    assert code == 0 and rep["sets"]["X1"] == [8] and rep["hole"] == [1, 2, 3, 4, 5, 6, 7]


def test_cwd_build(capsys):
    code, out, _ = run(capsys, "cwd-build", DATA / "c7_x1.col")
    rep = json.loads(out)
    assert code == 0 and rep["roundtrip"] and rep["route"] == "c7-uniform"
    assert rep["width"] <= rep["width_bound"]


def test_decompose(capsys, tmp_path):
    f = tmp_path / "p4.col"
    f.write_text("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n")
    code, out, _ = run(capsys, "decompose", f)
    assert code == 0 and json.loads(out)["atoms"] == 3


def test_multi_file_order_with_jobs(capsys):
    files = [DATA / "c5.col", DATA / "c7.col", DATA / "c8.col"]
    code, out, _ = run(capsys, "classify", "--jobs", "2", *files)
    lines = [json.loads(x) for x in out.splitlines()]
    assert [x["file"] for x in lines] == [str(f) for f in files]
    assert code == 0


def test_generate_deterministic(capsys, tmp_path):
    run(capsys, "generate", "--n", 9, "--seed", 4, "--require", "c5", "--count", 3, "--out", tmp_path / "a")
    run(capsys, "generate", "--n", 9, "--seed", 4, "--require", "c5", "--count", 3, "--out", tmp_path / "b")
    a = sorted((tmp_path / "a").iterdir())
    assert len(a) == 3
    for f in a:
        assert f.read_text() == (tmp_path / "b" / f.name).read_text()


def test_generate_seed_from_env(capsys, monkeypatch):
    monkeypatch.setenv("HOLEFORGE_SEED", "11")
    code, env_out, _ = run(capsys, "generate", "--n", 8)
    code2, flag_out, _ = run(capsys, "generate", "--n", 8, "--seed", 11)
    assert code == code2 == 0 and env_out == flag_out


def test_generate_needs_seed(capsys, monkeypatch):
    monkeypatch.delenv("HOLEFORGE_SEED", raising=False)
    assert run(capsys, "generate", "--n", 8)[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", 4)
    assert code == 0 and json.loads(out)["count"] == 60


@pytest.mark.parametrize("argv", [[], ["bogus"], ["audit", "x.col"], ["enumerate", "--n", "9"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_missing_file(capsys):
    assert run(capsys, "classify", "/nonexistent.col")[0] == 2


def test_structure_violation_exit_4(capsys, monkeypatch):
    from holeforge import cli
    from holeforge.pipeline import StructureViolation

    def boom(G):
        raise StructureViolation(G, tuple(range(G.n)), "forced for the test")

    monkeypatch.setattr(cli, "color_in_class", boom)
    code, out, err = run(capsys, "color", DATA / "c7.col")
    assert code == 4
    assert io.parse_dimacs(err) == cycle_graph(7)
