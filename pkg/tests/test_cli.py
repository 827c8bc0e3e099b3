"""CLI behavior: subcommand output, exit codes, file handling."""

import pytest

from pauliexp import validate_qasm
from pauliexp.cli import run_cli

ZZ_QASM = (
    "OPENQASM 2.0;\n"
    'include "qelib1.inc";\n'
    "qreg q[2];\n"
    "cx q[1],q[0];\n"
    "rz(1) q[0];\n"
    "cx q[1],q[0];\n"
)


def test_synth_writes_exactly_one_qasm_document(capsys):
    rc = run_cli(["synth", "--ham", "1*Z0 Z1", "--n", "2", "--t", "0.5"])
    captured = capsys.readouterr()
    assert rc == 0
    assert captured.out == ZZ_QASM
    assert captured.err == ""
    validate_qasm(captured.out)


def test_synth_out_file_keeps_stdout_empty(tmp_path, capsys):
    target = tmp_path / "zz.qasm"
    rc = run_cli(
        ["synth", "--ham", "1*Z0 Z1", "--n", "2", "--t", "0.5", "--out", str(target)]
    )
    assert rc == 0
    assert capsys.readouterr().out == ""
    assert target.read_text() == ZZ_QASM


def test_synth_compact_collapses_repeated_terms(capsys):
    rc = run_cli(
        ["synth", "--ham", "1*Z0 Z1 + 1*Z0 Z1", "--n", "2", "--t", "0.25", "--compact"]
    )
    assert rc == 0
    assert capsys.readouterr().out == ZZ_QASM


def test_trotter_repeats_slices(capsys):
    rc = run_cli(["trotter", "--ham", "1*Z0", "--n", "1", "--t", "0.5", "--reps", "3"])
    captured = capsys.readouterr()
    assert rc == 0
    assert captured.out.count("rz(") == 3


def test_verify_passes_on_six_qubit_yyx(capsys):
    rc = run_cli(
        ["verify", "--ham", "1*Y1 Y3 X5", "--n", "6", "--t", "0.7", "--variant", "z-ladder"]
    )
    captured = capsys.readouterr()
    assert rc == 0
    value, verdict = captured.out.split()
    assert verdict == "PASS"
    assert float(value) <= 1e-10


@pytest.mark.parametrize("variant", ["z-ladder", "x-ladder", "mixed"])
def test_verify_passes_for_every_variant(variant, capsys):
    rc = run_cli(
        ["verify", "--ham", "0.5*Z0 Z1 + 0.3*X0", "--n", "2", "--t", "0.9", "--variant", variant]
    )
    assert rc == 0
    assert capsys.readouterr().out.endswith("PASS\n")


def test_verify_exact_flags_trotter_error(capsys):
    # one slice of non-commuting terms differs from the exact exponential
    rc = run_cli(
        ["verify", "--ham", "1*Z0 + 1*X0", "--n", "1", "--t", "0.9", "--exact"]
    )
    captured = capsys.readouterr()
    assert rc == 2
    value, verdict = captured.out.split()
    assert verdict == "FAIL"
    assert float(value) > 1e-8


def test_verify_exact_passes_for_commuting_terms(capsys):
    rc = run_cli(
        ["verify", "--ham", "0.5*Z0 Z1 + 0.25*Z0", "--n", "2", "--t", "0.8", "--exact"]
    )
    assert rc == 0
    assert capsys.readouterr().out.endswith("PASS\n")


def test_stats_prints_gate_census(capsys):
    rc = run_cli(["stats", "--ham", "1*Y1 Y3 X5", "--n", "6", "--t", "0.7"])
    captured = capsys.readouterr()
    assert rc == 0
    assert captured.out == "cx=4\nrz=1\nh=6\ns=2\nsdg=2\n"


def test_parse_error_exits_1_with_position_on_stderr(capsys):
    rc = run_cli(["synth", "--ham", "1.0*Z0 Z0", "--n", "2", "--t", "0.5"])
    captured = capsys.readouterr()
    assert rc == 1
    assert captured.out == ""
    assert "offset 7" in captured.err


@pytest.mark.parametrize(
    "argv",
    [
        ["synth", "--n", "2", "--t", "0.5"],  # missing source
        ["synth", "--ham", "Z0", "--ham-file", "x.ham", "--n", "1", "--t", "0.5"],
        ["synth", "--ham", "Z0", "--n", "1", "--t", "0.5", "--bogus"],
        ["synth", "--ham", "Z0", "--n", "0", "--t", "0.5"],
        ["trotter", "--ham", "Z0", "--n", "1", "--t", "0.5", "--reps", "0"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_1(argv, capsys):
    rc = run_cli(argv)
    assert rc == 1
    assert capsys.readouterr().err != ""


def test_missing_ham_file_exits_1(tmp_path, capsys):
    rc = run_cli(
        ["synth", "--ham-file", str(tmp_path / "nope.ham"), "--n", "2", "--t", "0.5"]
    )
    assert rc == 1
    assert "cannot read" in capsys.readouterr().err


def test_ham_file_with_comments(tmp_path, capsys):
    source = tmp_path / "cost.ham"
    source.write_text("# two-qubit cost\n0.5*Z0 Z1\n+ 0.3*X0\n")
    rc = run_cli(["verify", "--ham-file", str(source), "--n", "2", "--t", "0.7"])
    assert rc == 0
    assert capsys.readouterr().out.endswith("PASS\n")


def test_oracle_cap_exits_3(capsys):
    rc = run_cli(["verify", "--ham", "Z0", "--n", "13", "--t", "0.5"])
    captured = capsys.readouterr()
    assert rc == 3
    assert "cap" in captured.err

    rc = run_cli(["verify", "--ham", "Z0", "--n", "9", "--t", "0.5", "--exact"])
    captured = capsys.readouterr()
    assert rc == 3
    assert "exact" in captured.err


def test_verify_distance_is_scientific_notation(capsys):
    run_cli(["verify", "--ham", "1*Z0", "--n", "1", "--t", "0.3"])
    value = capsys.readouterr().out.split()[0]
    assert "e" in value


def test_synth_has_no_size_cap(capsys):
    rc = run_cli(["synth", "--ham", "1*Z0 X10 Y19", "--n", "20", "--t", "0.4"])
    captured = capsys.readouterr()
    assert rc == 0
    assert "qreg q[20];" in captured.out
    validate_qasm(captured.out)


def test_non_finite_t_is_a_usage_error(capsys):
    rc = run_cli(["synth", "--ham", "1*Z0", "--n", "1", "--t", "inf"])
    assert rc == 1
    assert "finite" in capsys.readouterr().err


def test_angle_overflow_exits_1(capsys):
    rc = run_cli(["synth", "--ham", "1e300*Z0", "--n", "1", "--t", "1e300"])
    assert rc == 1
    assert capsys.readouterr().err != ""
