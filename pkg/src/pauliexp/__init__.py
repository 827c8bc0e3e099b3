"""pauliexp: compile exponentials of Pauli strings into quantum circuits.

The synthesis target is always exp(-i*t*w*P) for a real weight w and a
Pauli string P, realized as a CNOT parity ladder with one RZ plus basis
change wraps, and first-order Trotter products for sums of such terms.
A dense-matrix oracle verifies every construction at small qubit counts.
"""

from .circuit import GATE_KINDS, Gate, QuantumCircuit, cancel_adjacent
from .oracle import (
    MAX_DENSE_QUBITS,
    MAX_EXPM_QUBITS,
    circuit_unitary,
    exp_pauli_closed_form,
    hamiltonian_matrix,
    matrix_exponential,
    pauli_matrix,
    phase_invariant_distance,
)
from .parser import ParseError, format_hamiltonian, parse_hamiltonian
from .paulis import Hamiltonian, PauliOp, PauliString, PauliTerm
from .qasm import emit_qasm, validate_qasm
from .synth import (
    EvolutionParams,
    SynthVariant,
    exp_pauli_term,
    synth_z_rotation,
    trotter_circuit,
)

__all__ = [
    "GATE_KINDS",
    "Gate",
    "QuantumCircuit",
    "cancel_adjacent",
    "MAX_DENSE_QUBITS",
    "MAX_EXPM_QUBITS",
    "circuit_unitary",
    "exp_pauli_closed_form",
    "hamiltonian_matrix",
    "matrix_exponential",
    "pauli_matrix",
    "phase_invariant_distance",
    "ParseError",
    "format_hamiltonian",
    "parse_hamiltonian",
    "Hamiltonian",
    "PauliOp",
    "PauliString",
    "PauliTerm",
    "emit_qasm",
    "validate_qasm",
    "EvolutionParams",
    "SynthVariant",
    "exp_pauli_term",
    "synth_z_rotation",
    "trotter_circuit",
]

__version__ = "0.1.0"
