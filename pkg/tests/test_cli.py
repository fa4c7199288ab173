"""Command-line behavior: outputs, formats, exit codes."""

import json

import pytest

from qsim.circuit import render_state_lines
from qsim.cli import main

INV_SQRT2 = "0.7071067811865475"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_run_inline_hadamard(capsys):
    code, out, _ = run_cli(capsys, "run", "-c", "qreg q[1]; H(q[0]);")
    assert code == 0
    assert f"|0⟩ {INV_SQRT2} + 0.0i" in out
    assert f"|1⟩ {INV_SQRT2} + 0.0i" in out


def test_run_from_file(tmp_path, capsys):
    path = tmp_path / "bell.qc"
    path.write_text("qreg q[2];\nH(q[0]);\nCNOT(q[0], q[1]);\n")
    code, out, _ = run_cli(capsys, "run", str(path))
    assert code == 0
    assert f"|00⟩ {INV_SQRT2} + 0.0i" in out
    assert f"|11⟩ {INV_SQRT2} + 0.0i" in out


def test_run_trace_emits_all_stage_blocks(capsys):
    code, out, _ = run_cli(capsys, "run", "-c", "qreg q[1]; H(q[0]); X(q[0]);", "--trace")
    assert code == 0
    assert "stage 0 (initial):" in out
    assert "stage 1 [H(q[0])]:" in out
    assert "stage 2 [X(q[0])]:" in out


def test_run_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.qc"
    path.write_text("qreg q[2]; H(q[9]);")
    code, _, err = run_cli(capsys, "run", str(path))
    assert code == 2
    assert "line" in err and "col" in err


def test_run_capacity_exit_code(capsys):
    code, _, err = run_cli(capsys, "run", "-c", "qreg q[25];")
    assert code == 3
    assert "cap" in err


def test_run_missing_file(capsys):
    code, _, err = run_cli(capsys, "run", "/nonexistent/file.qc")
    assert code == 2


def test_run_needs_exactly_one_input(capsys):
    code, _, _ = run_cli(capsys, "run")
    assert code == 2
    code, _, _ = run_cli(capsys, "run", "x.qc", "-c", "qreg q[1];")
    assert code == 2


def test_run_histogram_only_with_measure(capsys):
    code, out, _ = run_cli(
        capsys, "run", "-c", "qreg q[1]; H(q[0]); measure;", "--shots", "100", "--seed", "3"
    )
    assert code == 0
    assert "counts (shots=100, seed=3):" in out
    code, out, _ = run_cli(capsys, "run", "-c", "qreg q[1]; H(q[0]);", "--shots", "100")
    assert code == 0
    assert "counts" not in out


def test_run_histogram_reproducible(capsys):
    args = ("run", "-c", "qreg q[2]; H(q); measure;", "--shots", "5000", "--seed", "11")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_run_json_matches_text_amplitudes(capsys):
    program = "qreg q[2]; H(q[0]); CNOT(q[0], q[1]);"
    _, text_out, _ = run_cli(capsys, "run", "-c", program)
    code, json_out, _ = run_cli(capsys, "run", "-c", program, "--format", "json")
    assert code == 0
    payload = json.loads(json_out)
    amps = [complex(re, im) for re, im in payload["state"]["amplitudes"]]
    rendered = render_state_lines(amps, payload["qubits"])
    text_lines = text_out.splitlines()
    assert text_lines[text_lines.index("final state:") + 1 :] == rendered


def test_run_json_trace_snapshots(capsys):
    code, out, _ = run_cli(
        capsys, "run", "-c", "qreg q[1]; H(q[0]);", "--format", "json", "--trace"
    )
    payload = json.loads(out)
    assert [s["stage"] for s in payload["snapshots"]] == [0, 1]
    assert payload["snapshots"][1]["label"] == "H(q[0])"


def test_grover_reports_checkpoints_and_discrepancy(capsys):
    code, out, _ = run_cli(capsys, "grover", "--k", "2", "--target", "2")
    assert code == 0
    assert "after iteration 1 (stage 10): 0.99" in out
    assert "after iteration 2 (stage 16): 0.24" in out
    assert "not at the end of the circuit" in out


def test_grover_single_iteration_probability_one(capsys):
    code, out, _ = run_cli(capsys, "grover", "--k", "2", "--target", "0", "--iterations", "1")
    assert code == 0
    assert "after iteration 1 (stage 10): 0.99" in out
    assert "not at the end" not in out


def test_grover_trace_stage1_matches_paper(capsys):
    code, out, _ = run_cli(capsys, "grover", "--k", "2", "--target", "2", "--trace")
    assert code == 0
    block = out.split("stage 1 [H]:")[1].split("stage 2")[0]
    assert f"|000⟩ {INV_SQRT2} + 0.0i" in block
    assert f"|100⟩ {INV_SQRT2} + 0.0i" in block


def test_grover_range_error(capsys):
    code, _, err = run_cli(capsys, "grover", "--k", "2", "--target", "7")
    assert code == 2
    assert "out of range" in err


def test_grover_json_payload(capsys):
    code, out, _ = run_cli(capsys, "grover", "--k", "2", "--target", "1", "--format", "json")
    payload = json.loads(out)
    assert payload["stage_count"] == 16
    assert payload["stage_labels"][4] == "oracle"
    assert payload["target_probability_by_iteration"][0]["probability"] == pytest.approx(
        1.0, abs=1e-9
    )


def test_diagram_writes_svg(tmp_path, capsys):
    state = tmp_path / "state.json"
    state.write_text(json.dumps({"qubits": 2, "amplitudes": [[0.8, 0], [0, 0], [0, 0], [0.6, 0]]}))
    out_path = tmp_path / "state.svg"
    code, _, _ = run_cli(capsys, "diagram", str(state), "--out", str(out_path))
    assert code == 0
    svg = out_path.read_text()
    assert svg.count("bar-group") == 4


def test_diagram_malformed_json(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, "diagram", str(bad), "--out", str(tmp_path / "x.svg"))
    assert code == 2


def test_diagram_empty_amplitudes(tmp_path, capsys):
    bad = tmp_path / "empty.json"
    bad.write_text(json.dumps({"qubits": 1, "amplitudes": []}))
    code, _, err = run_cli(capsys, "diagram", str(bad), "--out", str(tmp_path / "x.svg"))
    assert code == 2
