"""Dense-matrix ground truth for verifying synthesized circuits.

Everything here is written against the same conventions as the circuit IR:
qubit 0 is the leftmost Kronecker factor (most significant bit of a basis
state index), and the canonical target of a synthesis is exp(-i*t*P).

Matrices stay small by construction: Kronecker builds and circuit evaluation
cap at ``MAX_DENSE_QUBITS`` and the Hermitian exponential at
``MAX_EXPM_QUBITS``. These are desk-scale verification tools, not a
simulator.
"""

from __future__ import annotations

import math
from functools import reduce

import numpy as np

from .circuit import CX, CZ, H, RX, RZ, S, SDG, Gate, QuantumCircuit
from .paulis import Hamiltonian, PauliOp, PauliString

MAX_DENSE_QUBITS = 12
MAX_EXPM_QUBITS = 8

_PAULI_1Q = {
    PauliOp.I: np.eye(2, dtype=complex),
    PauliOp.X: np.array([[0, 1], [1, 0]], dtype=complex),
    PauliOp.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    PauliOp.Z: np.array([[1, 0], [0, -1]], dtype=complex),
}

_SQRT2_INV = 1 / math.sqrt(2)
_FIXED_GATES = {
    H: np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    S: np.array([[1, 0], [0, 1j]], dtype=complex),
    SDG: np.array([[1, 0], [0, -1j]], dtype=complex),
    # two-qubit basis order: (first qubit of the tuple, second), first is MSB
    CX: np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    CZ: np.diag([1, 1, 1, -1]).astype(complex),
}


def _gate_matrix(gate: Gate) -> np.ndarray:
    if gate.kind in _FIXED_GATES:
        return _FIXED_GATES[gate.kind]
    assert gate.angle is not None
    half = gate.angle / 2
    if gate.kind == RZ:
        return np.diag([np.exp(-1j * half), np.exp(1j * half)])
    if gate.kind == RX:
        c, s = math.cos(half), math.sin(half)
        return np.array([[c, -1j * s], [-1j * s, c]])
    raise AssertionError(f"unhandled gate kind {gate.kind}")


def _check_qubit_cap(n: int) -> None:
    if n > MAX_DENSE_QUBITS:
        raise ValueError(f"{n} qubits exceeds the dense-matrix cap of {MAX_DENSE_QUBITS}")


def pauli_matrix(p: PauliString) -> np.ndarray:
    """Kronecker product of the single-qubit factors, qubit 0 leftmost."""
    _check_qubit_cap(p.n_qubits)
    return reduce(np.kron, (_PAULI_1Q[op] for op in p.ops))


def exp_pauli_closed_form(p: PauliString, t: float) -> np.ndarray:
    """exp(-i*t*P) = cos(t)*I - i*sin(t)*P, exact because P squares to I.

    This closed form is the ground truth every synthesized circuit is
    checked against.
    """
    _check_qubit_cap(p.n_qubits)
    dim = 2**p.n_qubits
    return math.cos(t) * np.eye(dim, dtype=complex) - 1j * math.sin(t) * pauli_matrix(p)


def _apply_gate(gate_mat: np.ndarray, qubits: tuple[int, ...], u: np.ndarray, n: int) -> np.ndarray:
    """Left-multiply a gate embedded at ``qubits`` into the 2^n x m matrix u."""
    k = len(qubits)
    tensor = u.reshape((2,) * n + (u.shape[1],))
    gate_tensor = gate_mat.reshape((2,) * (2 * k))
    tensor = np.tensordot(gate_tensor, tensor, axes=(tuple(range(k, 2 * k)), qubits))
    return np.moveaxis(tensor, tuple(range(k)), qubits).reshape(u.shape)


def circuit_unitary(c: QuantumCircuit) -> np.ndarray:
    """Multiply out the circuit's gates in application order, phase included."""
    _check_qubit_cap(c.n_qubits)
    u = np.eye(2**c.n_qubits, dtype=complex)
    for gate in c.gates:
        u = _apply_gate(_gate_matrix(gate), gate.qubits, u, c.n_qubits)
    if c.global_phase != 0.0:
        u = np.exp(1j * c.global_phase) * u
    return u


def hamiltonian_matrix(h: Hamiltonian) -> np.ndarray:
    """Sum of coefficient * pauli_matrix(string); Hermitian by construction."""
    _check_qubit_cap(h.n_qubits)
    dim = 2**h.n_qubits
    total = np.zeros((dim, dim), dtype=complex)
    for term in h.terms:
        total += term.coefficient * pauli_matrix(term.string)
    return total


def matrix_exponential(m: np.ndarray, t: float) -> np.ndarray:
    """exp(-i*t*m) for Hermitian m, via scaling-and-squaring of a Taylor sum.

    The scaled matrix norm is brought below 0.5 before a 24-term Taylor
    series, then squared back, which keeps the result unitary to well below
    1e-9 at the allowed sizes. Deliberately independent of the closed-form
    route so the two can check each other.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > 2**MAX_EXPM_QUBITS:
        raise ValueError(
            f"dimension {m.shape[0]} exceeds the exponential cap of {2**MAX_EXPM_QUBITS}"
        )
    deviation = np.linalg.norm(m - m.conj().T)
    if deviation > 1e-10 * max(1.0, np.linalg.norm(m)):
        raise ValueError(f"matrix is not Hermitian (deviation {deviation:.3e})")

    a = -1j * t * m
    norm = np.linalg.norm(a)
    squarings = max(0, math.ceil(math.log2(norm / 0.5))) if norm > 0.5 else 0
    a /= 2.0**squarings

    total = np.eye(m.shape[0], dtype=complex)
    term = np.eye(m.shape[0], dtype=complex)
    for j in range(1, 25):
        term = term @ a / j
        total += term
    for _ in range(squarings):
        total = total @ total
    return total


def phase_invariant_distance(a: np.ndarray, b: np.ndarray) -> float:
    """min over phi of the Frobenius norm ||a - exp(i*phi)*b||.

    Zero exactly when a and b agree up to a global phase. The minimum sits
    at phi = arg(trace(b^dag a)); evaluating the difference there instead of
    expanding ||a||^2 + ||b||^2 - 2|trace| keeps full precision near zero,
    where the expanded form cancels catastrophically.
    """
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    phi = np.angle(np.trace(b.conj().T @ a))
    return float(np.linalg.norm(a - np.exp(1j * phi) * b))
