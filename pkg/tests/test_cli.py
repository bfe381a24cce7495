import json

import pytest

from qdecomp.cli import main, parse_range, resolve_config, build_parser, UsageError
from qdecomp.compiler import Policy
from qdecomp.serialize import loads


def _write(path, header, *rows):
    path.write_text("\n".join(json.dumps(r) for r in (header, *rows)) + "\n")
    return str(path)


@pytest.fixture
def c2x(tmp_path):
    return _write(tmp_path / "c2x.json", {"qubits": 3}, {"gate": "x", "target": 2, "controls": [0, 1]})


def test_compile_c2x_summary(c2x, capsys):
    assert main(["compile", c2x, "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["cnot_total"] == 6
    assert len(out["choices"]) == 1


def test_compile_writes_circuit_and_report(tmp_path, capsys):
    rows = [{"gate": "h", "target": i} for i in range(5)]
    rows += [{"gate": "z", "target": 4, "controls": [0, 1, 2, 3]}, {"gate": "ry", "params": [0.3], "target": 0,
                                                                    "controls": [1, 2]}]
    src = _write(tmp_path / "in.json", {"qubits": 5}, *rows)
    out, rep = tmp_path / "out.json", tmp_path / "rep.json"
    assert main(["compile", src, "--out", str(out), "--report", str(rep)]) == 0
    assert "cnot_total" in capsys.readouterr().out
    report = json.loads(rep.read_text())
    assert len(report["choices"]) == 2
    compiled = loads(out.read_text())
    assert all(len(i.controls) <= 1 for i in compiled.gates)


def test_compile_qasm_to_stdout(c2x, capsys):
    assert main(["compile", c2x, "--format", "qasm"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "qubits 3;" and sum(line.startswith("cx ") for line in lines) == 6


def test_compile_capacity_exit_3(tmp_path):
    src = _write(tmp_path / "big.json", {"qubits": 20}, {"gate": "x", "target": 19, "controls": [0, 1]})
    assert main(["compile", src, "--qpu", "16"]) == 3


def test_compile_parse_error_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope\n")
    assert main(["compile", str(bad)]) == 2
    assert main(["compile", str(tmp_path / "missing.json")]) == 2


@pytest.fixture
def compiled_c4x(tmp_path):
    rows = [{"gate": "x", "target": 4, "controls": [0, 1, 2, 3]}]
    src = _write(tmp_path / "c4x.json", {"qubits": 5}, *rows)
    out = tmp_path / "c4x_out.json"
    assert main(["compile", src, "--qpu", "8", "--out", str(out)]) == 0
    ideal = tmp_path / "ideal.json"
    ideal.write_text(json.dumps({"gate": "x", "target": 4, "controls": [0, 1, 2, 3]}))
    return out, ideal


def test_verify_equal_exit_0(compiled_c4x, capsys):
    out, ideal = compiled_c4x
    capsys.readouterr()
    assert main(["verify", str(out), "--ideal", str(ideal)]) == 0
    assert json.loads(capsys.readouterr().out)["equal"] is True


def test_verify_mutation_exit_1(compiled_c4x):
    out, ideal = compiled_c4x
    lines = out.read_text().splitlines()
    cx = next(k for k, line in enumerate(lines) if '"controls": [' in line and '"controls": []' not in line)
    out.write_text("\n".join(lines[:cx] + lines[cx + 1:]) + "\n")
    assert main(["verify", str(out), "--ideal", str(ideal)]) == 1


def test_verify_too_large_exit_4(tmp_path):
    src = _write(tmp_path / "w.json", {"qubits": 14}, {"gate": "x", "target": 13, "controls": [0]})
    ideal = tmp_path / "i.json"
    ideal.write_text(json.dumps({"gate": "x", "target": 13, "controls": [0]}))
    assert main(["verify", src, "--ideal", str(ideal)]) == 4


def test_bench_state_prep_table(capsys):
    assert main(["bench", "state-prep", "2..3", "--qpu", "16"]) == 0
    rows = capsys.readouterr().out.splitlines()[1:]
    assert [int(r.split()[-1]) for r in rows] == [8, 68]


def test_bench_policies_json(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["bench", "grover", "2..9", "--format", "json", "--out", str(a)]) == 0
    assert main(["bench", "grover", "2..9", "--policy", "force-no-aux", "--format", "json", "--out", str(b)]) == 0
    ra, rb = json.loads(a.read_text())["rows"], json.loads(b.read_text())["rows"]
    assert all(x["total"] <= y["total"] for x, y in zip(ra, rb))
    assert ra[-1]["total"] < rb[-1]["total"]


@pytest.mark.parametrize("argv", [["bench", "grover", "5..4"], ["bench", "grover", "x..y"],
                                  ["bench", "grover", "2..20"], ["bench", "grover", "2..3", "--format", "qasm"],
                                  ["bench", "grover", "1..3"], ["compile"], ["bench", "nope", "2..3"]])
def test_bench_bad_arguments_exit_2(argv):
    try:
        code = main(argv)
    except SystemExit as e:  # argparse rejects unknown choices itself
        code = e.code
    assert code == 2


def test_bench_csv(capsys):
    assert main(["bench", "grover", "3", "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines()[0].startswith("n,")


def test_parse_range():
    assert parse_range("2..4") == [2, 3, 4]
    assert parse_range("7") == [7]
    with pytest.raises(UsageError):
        parse_range("5..4")


def test_config_precedence(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"qpu": 10, "policy": "force-no-aux", "tol": 1e-6}))
    parser = build_parser()
    args = parser.parse_args(["bench", "grover", "3", "--config", str(cfg)])
    c = resolve_config(args, environ={})
    assert (c.qpu_total, c.policy, c.tolerance) == (10, Policy.FORCE_NO_AUX, 1e-6)
    c = resolve_config(args, environ={"QDECOMP_QPU": "12", "QDECOMP_POLICY": "auto"})
    assert (c.qpu_total, c.policy) == (12, Policy.AUTO)
    args = parser.parse_args(["bench", "grover", "3", "--config", str(cfg), "--qpu", "14"])
    assert resolve_config(args, environ={"QDECOMP_QPU": "12"}).qpu_total == 14
    assert resolve_config(parser.parse_args(["bench", "grover", "3"]), environ={}).qpu_total == 16


@pytest.mark.parametrize("env", [{"QDECOMP_QPU": "0"}, {"QDECOMP_TOL": "-1"}, {"QDECOMP_POLICY": "greedy"}])
def test_invalid_config_rejected(env):
    args = build_parser().parse_args(["bench", "grover", "3"])
    with pytest.raises(UsageError):
        resolve_config(args, environ=env)


def test_env_policy_used_by_main(monkeypatch, capsys):
    monkeypatch.setenv("QDECOMP_POLICY", "force-no-aux")
    assert main(["bench", "grover", "9", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert list(rows[0]["per_algorithm"]) == ["LinearDepth"]
