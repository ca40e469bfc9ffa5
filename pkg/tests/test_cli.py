import json
import re
from fractions import Fraction as F

import pytest

from coxflag.cli import main
from coxflag.complex import WeightedGraph, read_complex, write_complex
from coxflag.constructions import cross_polytope_boundary, cycle_graph


@pytest.fixture
def files(tmp_path):
    def put(name, graph):
        p = tmp_path / name
        write_complex(p, graph)
        return str(p)

    mixed = WeightedGraph(cycle_graph(5).vertices,
                          {("c00", "c01"): 7, ("c01", "c02"): 5, ("c02", "c03"): 4,
                           ("c03", "c04"): 3, ("c04", "c00"): 2})
    return {
        "pentagon": put("pentagon.txt", cycle_graph(5)),
        "cell16": put("cell16.txt", cross_polytope_boundary(4)),
        "f4": put("f4.txt", WeightedGraph("abcd", {("a", "b"): 3, ("b", "c"): 4, ("c", "d"): 3,
                                                   ("a", "c"): 2, ("b", "d"): 2, ("a", "d"): 2})),
        "edge6": put("edge6.txt", WeightedGraph("ab", {("a", "b"): 6})),
        "mixed": put("mixed.txt", mixed),
        "triangles": put("triangles.txt", WeightedGraph("abcd", {
            p: 2 for p in [("a", "b"), ("b", "c"), ("a", "c"), ("b", "d"), ("c", "d")]})),
        "tmp": tmp_path,
    }


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_omega_pentagon(capsys, files):
    code, out, _ = run(capsys, "omega", files["pentagon"])
    assert code == 0 and out.splitlines()[0] == "omega = -1/4"


def test_classify_f4(capsys, files):
    code, out, _ = run(capsys, "classify", files["f4"])
    assert code == 0
    assert "3-simplices of type F4: 1" in out.splitlines()


def test_ghs_sixteen_cell(capsys, files):
    code, out, _ = run(capsys, "ghs", files["cell16"], 3)
    assert code == 0 and out.strip() == "GHS^3: yes"


def test_ghs_failure_exit_code(capsys, files):
    code, out, _ = run(capsys, "ghs", files["triangles"], 2)
    assert code == 1 and "GHS^2: no" in out and "certificate" in out


def test_homology(capsys, files):
    code, out, _ = run(capsys, "homology", files["cell16"])
    assert code == 0 and out.splitlines()[-1] == "H~3 = Z"


def test_pipeline_trivial(capsys, files):
    code, out, _ = run(capsys, "pipeline", files["pentagon"])
    assert code == 0 and out.splitlines()[0] == "0 steps"


def test_reduce_hexagonal_edge(capsys, files):
    out_path = files["tmp"] / "reduced.txt"
    code, out, _ = run(capsys, "--format", "json", "reduce", files["edge6"], "--edge", "a,b",
                       "--to", 2, "-o", out_path)
    assert code == 0
    (step,) = json.loads(out)["steps"]
    assert step["delta_direct"] == step["delta_formula"] == "1/6"
    assert read_complex(out_path).weight("a", "b") == 2


def test_pipeline_mixed_pentagon_telescopes(capsys, files):
    code, out, _ = run(capsys, "pipeline", files["mixed"], "--format", "json")
    assert code == 0
    data = json.loads(out)
    total = sum(F(s["delta_direct"]) for s in data["steps"])
    assert total == F(data["omega_final"]) - F(data["omega_initial"]) == F(data["total_delta"])
    assert all(s["agreed"] for s in data["steps"])


def test_pipeline_is_deterministic(capsys, files):
    outs = []
    for i in range(2):
        p = files["tmp"] / f"final{i}.txt"
        outs.append(run(capsys, "pipeline", files["mixed"], "-o", p)[1])
        outs.append(p.read_bytes())
    assert outs[0] == outs[2] and outs[1] == outs[3]


def test_rationals_reparse(capsys, files):
    _, out, _ = run(capsys, "pipeline", files["mixed"])
    tokens = re.findall(r"-?\d+/\d+", out)
    assert tokens
    for tok in tokens:
        q = F(tok)
        assert str(q) == tok


def test_verify(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    lines = out.splitlines()
    assert "PASS  f4 - f4~ = -17/5760" in lines
    assert "PASS  E8 diffs = -2537/696729600" in lines
    assert "PASS  five-term identity holds for n = 3..30" in lines
    assert not any(line.startswith("FAIL") for line in lines)


@pytest.mark.parametrize("argv", [
    ["omega", "missing.txt"],
    ["verify", "--max-n", "3"],
    ["reduce", "EDGE6", "--edge", "a,b", "--to", "7"],
    ["reduce", "EDGE6", "--edge", "a", "--to", "2"],
    ["reduce", "EDGE6", "--edge", "a,z", "--to", "2"],
    ["bogus"],
])
def test_input_errors(capsys, files, argv):
    argv = [files["edge6"] if a == "EDGE6" else a for a in argv]
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_parse_error_reports_line(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("v a\nv b\ne a b 1\n")
    code, _, err = run(capsys, "omega", p)
    assert code == 2 and "line 3" in err


def test_infinite_group_is_input_error(capsys, tmp_path):
    p = tmp_path / "tri.txt"
    write_complex(p, WeightedGraph("abc", {("a", "b"): 3, ("b", "c"): 3, ("a", "c"): 3}))
    code, _, err = run(capsys, "classify", p)
    assert code == 2 and "infinite" in err
