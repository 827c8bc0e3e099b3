"""Shared random generators for the test suite. All callers pass a seeded Random."""

from random import Random

from pauliexp import Gate, Hamiltonian, PauliString, PauliTerm, QuantumCircuit

PAULI_CHARS = "IXYZ"


def random_pauli_label(rng: Random, n: int, min_weight: int = 0) -> str:
    while True:
        label = "".join(rng.choice(PAULI_CHARS) for _ in range(n))
        if sum(ch != "I" for ch in label) >= min_weight:
            return label


def random_pauli_string(rng: Random, n: int, min_weight: int = 0) -> PauliString:
    return PauliString.from_label(random_pauli_label(rng, n, min_weight))


def random_hamiltonian(rng: Random, max_qubits: int = 8, max_terms: int = 10) -> Hamiltonian:
    n = rng.randint(1, max_qubits)
    terms = tuple(
        PauliTerm(rng.uniform(-3.0, 3.0), random_pauli_string(rng, n))
        for _ in range(rng.randint(1, max_terms))
    )
    return Hamiltonian(n, terms)


def random_circuit(rng: Random, n: int, n_gates: int) -> QuantumCircuit:
    kinds = ("h", "s", "sdg", "rz", "rx") + (("cx", "cz") if n >= 2 else ())
    gates = []
    for _ in range(n_gates):
        kind = rng.choice(kinds)
        if kind in ("cx", "cz"):
            a, b = rng.sample(range(n), 2)
            gates.append(Gate.cx(a, b) if kind == "cx" else Gate.cz(a, b))
        elif kind in ("rz", "rx"):
            q = rng.randrange(n)
            angle = rng.uniform(-3.2, 3.2)
            gates.append(Gate.rz(q, angle) if kind == "rz" else Gate.rx(q, angle))
        else:
            q = rng.randrange(n)
            gates.append(Gate(kind, (q,)))
    phase = rng.uniform(-3.2, 3.2) if rng.random() < 0.5 else 0.0
    return QuantumCircuit(n, tuple(gates), phase)
