import json

import pytest

from jordansandwich.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "--matrix", "[[1,0,0],[0,1,0],[0,0,2]]")
    res = json.loads(out)["result"]
    assert code == 0
    assert res["delta"]["blocks"] == [[1, 1], [1]]
    assert res["gamma"] == [2, 1] and res["centralizer_dim"] == 5 and res["d"] == 2


def test_analyze_regular(capsys):
    code, out, _ = run(capsys, "analyze", "--matrix", "[[2,1],[0,2]]")
    res = json.loads(out)["result"]
    assert code == 0 and res["delta"]["blocks"] == [[2]] and res["centralizer_dim"] == 2
    assert res["fixed_dims"] == [0]


def test_analyze_nonsplit(capsys):
    code, _, err = run(capsys, "analyze", "--field", "prime:3", "--matrix", "[[0,1],[-1,0]]")
    assert code == 2 and "NonSplit" in err


def test_analyze_bad_json(capsys):
    code, _, _ = run(capsys, "analyze", "--matrix", "[[1,2]")
    assert code == 64


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 64
    assert run(capsys, "verify-sum", "--n", "3")[0] == 64
    assert run(capsys, "count-fixed", "--d", "1")[0] == 64
    assert run(capsys, "sandwich", "--delta", "[[2],[0]]")[0] == 64


def test_verify_sum(capsys):
    code, out, _ = run(capsys, "verify-sum", "--n", "4", "--s", "2")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["result"]["counterexamples"] == 0
    assert data["seed"] == 0


def test_enumerate_types(capsys):
    code, out, _ = run(capsys, "enumerate-types", "--n", "3")
    assert code == 0 and len(json.loads(out)["result"]["types"]) == 6


def test_count_fixed_identity(capsys):
    eye = json.dumps([[int(i == j) for j in range(4)] for i in range(4)])
    code, out, _ = run(capsys, "count-fixed", "--matrix", eye, "--d", "2", "--q", "2")
    assert code == 0 and json.loads(out)["result"]["rows"][0]["count"] == 35
    code, out, _ = run(capsys, "count-fixed", "--descriptor", "U:[3,1]", "--d", "2", "--q", "3", "--format", "tsv")
    assert out.splitlines() == ["representative\td\tq\tcount", "U([3, 1])\t2\t3\t4"]


def test_count_fixed_guardrail(capsys):
    code, _, err = run(capsys, "count-fixed", "--descriptor", "S:[5]", "--d", "2", "--q", "3", "--max-enum", "10")
    assert code == 2 and "GuardrailExceeded" in err


def test_dimension(capsys):
    code, out, _ = run(capsys, "dimension", "--descriptor", "U:[3,1]", "--d", "2", "--primes", "2,3,5,7,11,13")
    res = json.loads(out)["result"]
    assert code == 0 and res["dimension"] == 1 and res["certified"]
    code, _, _ = run(capsys, "dimension", "--descriptor", "U:[3,1]", "--d", "2", "--primes", "2,3")
    assert code == 2
    code, _, _ = run(capsys, "dimension", "--descriptor", "U:[3,1]", "--d", "2", "--primes", "2,4")
    assert code == 64


def test_witness_and_sandwich(capsys):
    code, out, _ = run(capsys, "witness", "--delta", "[[2],[1,1]]", "--mode", "x-to-u", "--samples", "3")
    data = json.loads(out)
    assert code == 0 and data["result"]["centralizer_dim"] == 6 and data["result"]["claim"] == "thm2.2-part2"
    code, _, err = run(capsys, "witness", "--delta", "[[4]]", "--mode", "ss-to-x", "--field", "prime:3")
    assert code == 2 and "FieldTooSmall" in err
    code, out, _ = run(capsys, "sandwich", "--delta", "[[2],[1,1]]")
    assert json.loads(out)["result"]["fixed_dims"] == [1, 1, 1]


def test_verify_sandwich(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify-sandwich", "--delta", "[[2],[1,1]]", "--primes", "2,3,5,7,11,13",
                       "--seed", "4", "--output", str(target))
    data = json.loads(target.read_text())
    assert code == 0 and out == "" and data["passed"] and data["seed"] == 4
    assert set(data["result"]["parts"]) == {"thm2.2-part1", "thm2.2-part2", "thm2.2-part3", "thm1.1-part4"}


def test_reports_are_byte_identical(capsys):
    args = ("witness", "--delta", "[[2,1],[1]]", "--mode", "ss-to-x", "--seed", "11", "--curve", "2")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_matrix_from_file(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"field": {"kind": "prime", "p": 5}, "entries": [["1", "1"], ["0", "1"]]}))
    code, out, _ = run(capsys, "analyze", "--matrix", str(path))
    assert code == 0 and json.loads(out)["result"]["jordan_data"]["concrete"][0]["partition"] == [2]


def test_verify_sum_counterexample_exit_code(capsys):
    code, out, _ = run(capsys, "verify-sum", "--n", "4", "--s", "3")
    data = json.loads(out)
    assert code == 1 and not data["passed"] and "counterexample" in data["result"]
    code, out, _ = run(capsys, "verify-sum", "--n", "4", "--s", "3", "--exclude-central")
    assert code == 0 and json.loads(out)["result"]["exclude_central"]
