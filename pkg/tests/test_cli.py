import json
import subprocess
import sys

import pytest

from linedigraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pipeline_ck24(capsys):
    code, out, _ = run(capsys, "pipeline", "ck:d=2,l=4", "--horizon", "10")
    assert code == 0
    doc = json.loads(out)
    assert doc["terms"] == [str(x) for x in (18, 30, 48, 78, 126, 204, 330, 534, 864, 1398, 2262)]
    assert doc["classification"]["behaviour"] == "Increasing"
    assert all(v["status"] == "pass" for v in doc["verdicts"])
    assert all(v["reason"] for v in doc["verdicts"])


def test_pipeline_unicyclic_and_cycle(capsys):
    code, out, _ = run(capsys, "pipeline", "uni:n=3,d=2", "--horizon", "6")
    doc = json.loads(out)
    assert code == 0
    assert doc["terms"] == ["12"] * 7
    assert doc["classification"] == {"behaviour": "Constant", "since": 0, "value": "12"}
    code, out, _ = run(capsys, "pipeline", "cycle:n=4", "--horizon", "6")
    assert code == 0 and json.loads(out)["terms"] == ["4"] * 7


def test_pipeline_is_deterministic(capsys):
    outs = {run(capsys, "pipeline", "rand:n=9,p=0.3,seed=5", "--horizon", "8")[1] for _ in range(2)}
    assert len(outs) == 1


def test_pipeline_pretty_goes_to_stderr(capsys):
    code, out, err = run(capsys, "pipeline", "ck:d=2,l=4", "--pretty")
    json.loads(out)
    assert "n_k = n_{k-1} + n_{k-2} (k ≥ 2), n_0 = 18, n_1 = 30" in err


def test_pipeline_with_supplied_partition(tmp_path, capsys):
    part = tmp_path / "p.json"
    part.write_text(json.dumps({"cells": [[0, 1, 2], [3, 4, 5], list(range(6, 12))]}))
    code, out, _ = run(capsys, "pipeline", "uni:n=3,d=2", "--partition", str(part))
    doc = json.loads(out)
    assert code == 0
    assert doc["partition"]["source"] == "supplied"
    assert doc["minimal_polynomial"]["text"] == "x^3 - x^2"
    part.write_text(json.dumps({"cells": [[0, 1, 2], list(range(3, 12))]}))
    code, out, _ = run(capsys, "pipeline", "uni:n=3,d=2", "--partition", str(part))
    assert code == 1
    assert json.loads(out)["verdicts"][0]["status"] == "fail"


def test_pipeline_budget_skips_explicit(capsys):
    code, out, _ = run(capsys, "pipeline", "kautz:d=3,l=3", "--verify-upto", "4", "--budget", "2000")
    doc = json.loads(out)
    assert code == 0
    statuses = {v["name"]: v["status"] for v in doc["verdicts"]}
    assert statuses["explicit_order k=3"] == "pass"
    assert statuses["explicit_order k=4"] == "skipped"


@pytest.mark.parametrize("spec,k_max", [("ck:d=2,l=4", 6), ("rand:n=8,p=0.3,seed=7", 5), ("uni:n=3,d=2", 10)])
def test_verify(capsys, spec, k_max):
    code, out, _ = run(capsys, "verify", spec, "--verify-upto", str(k_max))
    doc = json.loads(out)
    assert code == 0
    assert [r["status"] for r in doc["verdicts"]] == ["pass"] * (k_max + 1)
    if spec.startswith("uni"):
        assert {r["explicit"] for r in doc["verdicts"]} == {"12"}


def test_export(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "cycle:n=3", "--format", "json")
    assert json.loads(out) == {"n": 3, "arcs": [[0, 1], [1, 2], [2, 0]]}
    code, out, _ = run(capsys, "export", "cycle:n=3", "--what", "line")
    line = json.loads(out)
    assert line["n"] == 3 and len(line["arcs"]) == 3
    code, out, _ = run(capsys, "export", "uni:n=3,d=2", "--what", "quotient", "--format", "dot")
    assert out.count("->") == 3 and 'V2 -> V3 [label="2"]' in out
    target = tmp_path / "g.dot"
    code, out, _ = run(capsys, "export", "ck:d=2,l=4", "--format", "dot", "--output", str(target))
    assert code == 0 and target.read_text().count("->") == 30
    code, _, err = run(capsys, "export", "cycle:n=3", "--format", "gml")
    assert code == 2 and "gml" in err


def test_input_file(capsys, tmp_path):
    f = tmp_path / "g.json"
    f.write_text(json.dumps({"n": 2, "arcs": [[0, 1], [0, 1], [1, 0]]}))
    code, out, _ = run(capsys, "seq", "--input", str(f), "--horizon", "4")
    from linedigraph import build_digraph, order_bruteforce
    G = build_digraph(2, [(0, 1), (0, 1), (1, 0)])
    assert json.loads(out)["terms"] == [str(order_bruteforce(G, k)) for k in range(5)]


def test_minpoly_recurrence_squarefree(capsys):
    _, out, _ = run(capsys, "minpoly", "uni:n=4,d=3")
    assert json.loads(out)["minimal_polynomial"] == {"text": "x^3 - x^2", "r": 3, "alpha": ["1", "0", "0"]}
    _, out, _ = run(capsys, "recurrence", "ck:d=2,l=4")
    rec = json.loads(out)["recurrence"]
    assert rec["alpha"] == ["1", "1"] and rec["initial"] == ["18", "30"]
    _, out, _ = run(capsys, "squarefree", "4", "8")
    assert json.loads(out)["counts"] == {"4": "18", "8": "126"}


def test_seed_override(capsys):
    _, a, _ = run(capsys, "seq", "rand:n=6,p=0.5,seed=1", "--seed", "2")
    _, b, _ = run(capsys, "seq", "rand:n=6,p=0.5,seed=2")
    assert json.loads(a)["terms"] == json.loads(b)["terms"]


def test_usage_errors(capsys):
    assert run(capsys, "pipeline", "nope:n=1")[0] == 2
    assert run(capsys, "pipeline")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "linedigraph", "seq", "cycle:n=3", "--horizon", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["terms"] == ["3", "3", "3"]
