import io as _io
import json
import subprocess
import sys

from graphcat import load_graph, petersen_graph
from graphcat.cli import run


def call(*argv):
    out, err = _io.StringIO(), _io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def test_named_graph_roundtrips_through_json(tmp_path):
    code, out, _ = call("named", "petersen")
    assert code == 0
    path = tmp_path / "p.json"
    path.write_text(out)
    assert load_graph(path) == petersen_graph()


def test_unknown_name_is_invalid_input():
    code, out, err = call("named", "nope")
    assert code == 2 and out == "" and err


def test_argparse_errors_exit_two():
    code, out, _ = call("frobnicate")
    assert code == 2 and out == ""
    code, _, _ = call("catalog")
    assert code == 2


def test_catalog_and_budget_refusal():
    assert len(call_json("catalog", "3")) == 7
    assert len(call_json("catalog", "5", "--connected")) == 1 + 1 + 2 + 6 + 21
    code, out, err = call("catalog", "8")
    assert code == 3 and out == "" and err


def test_budget_flag_refuses_large_searches():
    code, out, _ = call("transform", "tree", "--input", "k5", "--budget", "10")
    assert code == 3 and out == ""


def test_iso_and_aut():
    assert call_json("iso", "--g", "c5", "--h", "c5")["isomorphic"]
    assert not call_json("iso", "--g", "c5", "--h", "p5")["isomorphic"]
    assert call_json("aut", "--input", "petersen")["order"] == 120


def test_morphism_check_and_enumerate():
    assert call_json("morphism", "check", "--source", "k2", "--target", "k3",
                     "--map", '{"0": 0, "1": 1}')["valid"]
    res = call_json("morphism", "check", "--source", "k2", "--target", "k3",
                    "--map", '{"0": 0, "1": 0}')
    assert not res["valid"] and res["violation"]
    res = call_json("morphism", "enumerate", "--source", "k2", "--target", "k3")
    assert res["count"] == 6


def test_invariants_command():
    res = call_json("invariant", "--input", "c5", "--exhaustive")
    assert res


def test_product_verify_reports():
    assert call_json("product", "verify", "--kind", "cross", "--category", "gra", "--pool", "n2")["passed"]
    res = call_json("product", "verify", "--kind", "cartesian", "--pool", "n3")
    assert not res["passed"] and res["counterexample"]["reason"]
    assert not call_json("coproduct", "verify", "--category", "cgra", "--pool", "n2")["passed"]


def test_contraction_and_minor_commands():
    assert call_json("minor", "--pattern", "k33", "--host", "petersen")["minor"]
    assert not call_json("topo-minor", "--pattern", "k5", "--host", "petersen")["topological_minor"]
    res = call_json("contraction-exists", "--host", "petersen", "--pattern", "k33", "--faithful")
    assert res["exists"] is False
    res = call_json("contract", "--input", "c4", "--blocks", '{"blocks": [[0, 1], [2], [3]]}')
    assert len(res["vertices"]) == 3 and len(res["edges"]) == 3
    code, _, err = call("contract", "--input", "c4", "--blocks", '{"blocks": [[0, 2], [1, 3]]}')
    assert code == 2 and "connected" in err


def test_order_commands():
    assert call_json("order", "minimal", "--divisors", "2..12")["minimal"] == [2, 3, 5, 7, 11]
    rep = call_json("order", "antichain", "--divisors", "2..12")
    assert rep["max_antichain_size"] == 6 and rep["longest_chain_length"] == 3
    assert call_json("order", "classify", "--divisors", "2..12")["well_founded"]


def test_order_fold_refuses_cycle(tmp_path):
    cyc = {"carrier": ["a", "b", "c"],
           "relations": [{"name": "le", "arity": 2, "tuples": [["a", "b"], ["b", "c"], ["c", "a"]]}]}
    path = tmp_path / "cyc.json"
    path.write_text(json.dumps(cyc))
    code, out, err = call("order", "fold", "--input", str(path))
    assert code == 2 and out == "" and "not well-founded" in err


def test_transform_commands():
    res = call_json("transform", "tree", "--input", "c3")
    assert len(res["object_index"]) == 3 and len(res["graph"]["edges"]) == 3
    res = call_json("transform", "realization", "--degrees", "2,2,2,2,2,2")
    assert len(res["object_index"]) == 2 and len(res["graph"]["edges"]) == 1
    res = call_json("transform", "divisor", "--ints", "2,3,4,6")
    assert len(res["graph"]["edges"]) == 3
    code, _, _ = call("transform", "matching", "--input", "p3")
    assert code == 2


def test_formats():
    code, out, _ = call("transform", "tree", "--input", "c3", "--format", "dot")
    assert code == 0 and out.startswith("graph")
    code, out, _ = call("named", "c4", "--format", "dot")
    assert code == 0 and "--" in out
    code, out, err = call("order", "minimal", "--divisors", "2..6", "--format", "dot")
    assert code == 2 and out == ""


def test_global_flags_before_the_verb():
    code, out, _ = call("--format", "dot", "named", "c4")
    assert code == 0 and out.startswith("graph")


def test_environment_defaults(monkeypatch):
    monkeypatch.setenv("GRAPHCAT_FORMAT", "dot")
    code, out, _ = call("named", "c4")
    assert code == 0 and out.startswith("graph")
    monkeypatch.setenv("GRAPHCAT_FORMAT", "json")
    monkeypatch.setenv("GRAPHCAT_BUDGET", "5")
    code, _, _ = call("transform", "tree", "--input", "k5")
    assert code == 3


def test_output_is_deterministic():
    for argv in (("aut", "--input", "petersen"), ("minor", "--pattern", "k33", "--host", "petersen"),
                 ("catalog", "4")):
        assert call(*argv)[1] == call(*argv)[1]


def test_console_script_runs_as_module():
    proc = subprocess.run([sys.executable, "-m", "graphcat", "named", "k3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and len(json.loads(proc.stdout)["edges"]) == 3
