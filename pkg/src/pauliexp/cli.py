"""Command-line front-end: synth / trotter / verify / stats.

``synth`` and ``trotter`` write exactly one OpenQASM document to stdout (or
``--out``), with no banner lines, so they are safe to pipe. ``verify``
checks a synthesized circuit against the dense-matrix oracle and reports the
phase-invariant distance. ``stats`` prints the gate histogram.

Exit codes: 0 success / verification PASS, 1 parse or usage error, 2
verification FAIL, 3 verification impossible because the size cap of the
dense oracle is exceeded.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

import numpy as np

from .circuit import GATE_KINDS, QuantumCircuit
from .oracle import (
    MAX_DENSE_QUBITS,
    MAX_EXPM_QUBITS,
    circuit_unitary,
    exp_pauli_closed_form,
    hamiltonian_matrix,
    matrix_exponential,
    phase_invariant_distance,
)
from .parser import ParseError, parse_hamiltonian
from .paulis import Hamiltonian
from .qasm import emit_qasm
from .synth import EvolutionParams, SynthVariant, trotter_circuit

VERIFY_THRESHOLD = 1e-8


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # raise instead of exiting so run_cli controls the exit code
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _finite_float(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be finite, got {text!r}")
    return value


def _add_common(sub: argparse.ArgumentParser, compact: bool = False, out: bool = False) -> None:
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument("--ham", help="Hamiltonian expression, e.g. '0.5*Z0 Z1 + 0.3*X0'")
    source.add_argument("--ham-file", help="path to a .ham file (same grammar, # comments)")
    sub.add_argument("--n", type=_positive_int, required=True, help="number of qubits")
    sub.add_argument("--t", type=_finite_float, required=True, help="evolution angle t")
    sub.add_argument(
        "--variant",
        choices=[v.value for v in SynthVariant],
        default=SynthVariant.Z_LADDER.value,
        help="synthesis construction (default: z-ladder)",
    )
    if compact:
        sub.add_argument("--compact", action="store_true", help="run peephole cancellation")
    if out:
        sub.add_argument("--out", help="write the QASM document here instead of stdout")


def _build_parser() -> _Parser:
    parser = _Parser(prog="pauliexp", description=__doc__, add_help=True)
    subs = parser.add_subparsers(dest="command", required=True)

    synth = subs.add_parser("synth", help="synthesize one slice and emit OpenQASM")
    _add_common(synth, compact=True, out=True)

    trotter = subs.add_parser("trotter", help="synthesize a Trotter product and emit OpenQASM")
    _add_common(trotter, compact=True, out=True)
    trotter.add_argument("--reps", type=_positive_int, default=1, help="Trotter slices")

    verify = subs.add_parser("verify", help="check the synthesis against the matrix oracle")
    _add_common(verify)
    verify.add_argument(
        "--exact",
        action="store_true",
        help="compare against the exponential of the full Hamiltonian "
        "instead of the per-term product",
    )

    stats = subs.add_parser("stats", help="print the gate histogram of one slice")
    _add_common(stats, compact=True)
    return parser


def _load_hamiltonian(ns: argparse.Namespace) -> Hamiltonian:
    if ns.ham is not None:
        text = ns.ham
    else:
        with open(ns.ham_file, encoding="utf-8") as fh:
            text = fh.read()
    return parse_hamiltonian(text, ns.n)


def _synthesize(ns: argparse.Namespace, h: Hamiltonian, reps: int = 1) -> QuantumCircuit:
    params = EvolutionParams(ns.t, reps)
    compact = getattr(ns, "compact", False)
    return trotter_circuit(h, params, SynthVariant(ns.variant), compact)


def _emit(ns: argparse.Namespace, circuit: QuantumCircuit) -> None:
    document = emit_qasm(circuit)
    if ns.out:
        with open(ns.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(document)
    else:
        sys.stdout.write(document)


def _verify(ns: argparse.Namespace, h: Hamiltonian) -> int:
    if h.n_qubits > MAX_DENSE_QUBITS:
        print(
            f"cannot verify: {h.n_qubits} qubits exceeds the dense-matrix "
            f"cap of {MAX_DENSE_QUBITS}",
            file=sys.stderr,
        )
        return 3
    if ns.exact and h.n_qubits > MAX_EXPM_QUBITS:
        print(
            f"cannot verify --exact: {h.n_qubits} qubits exceeds the matrix "
            f"exponential cap of {MAX_EXPM_QUBITS}",
            file=sys.stderr,
        )
        return 3
    synthesized = circuit_unitary(_synthesize(ns, h))
    if ns.exact:
        reference = matrix_exponential(hamiltonian_matrix(h), ns.t)
    else:
        reference = np.eye(2**h.n_qubits, dtype=complex)
        for term in h.terms:  # first term applies first: later terms multiply in front
            reference = exp_pauli_closed_form(term.string, ns.t * term.coefficient) @ reference
    distance = phase_invariant_distance(synthesized, reference)
    passed = distance <= VERIFY_THRESHOLD
    print(f"{distance:.6e} {'PASS' if passed else 'FAIL'}")
    return 0 if passed else 2


def _stats(ns: argparse.Namespace, h: Hamiltonian) -> int:
    counts = _synthesize(ns, h).gate_counts()
    for kind in GATE_KINDS:
        if counts[kind]:
            print(f"{kind}={counts[kind]}")
    return 0


def run_cli(argv: Sequence[str]) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(list(argv))
        h = _load_hamiltonian(ns)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"parse error at offset {exc.position}: {exc.message}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"cannot read Hamiltonian file: {exc}", file=sys.stderr)
        return 1

    try:
        if ns.command == "synth":
            _emit(ns, _synthesize(ns, h))
            return 0
        if ns.command == "trotter":
            _emit(ns, _synthesize(ns, h, reps=ns.reps))
            return 0
        if ns.command == "verify":
            return _verify(ns, h)
        if ns.command == "stats":
            return _stats(ns, h)
    except ValueError as exc:  # e.g. rotation angle overflowing to inf
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled command {ns.command!r}")


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
