"""Circuit synthesis for exp(-i*t*w*P) and first-order Trotter products.

The base construction accumulates the joint parity of a string's support
qubits onto the lowest-index one with a CNOT chain, rotates it with a single
RZ, and uncomputes. Non-Z factors are handled by basis-change wraps: H turns
the Z axis into X, and an additional S / S-dagger pair turns X into Y.

Three interchangeable constructions are exposed:

* ``z-ladder``   -- parity ladder in the Z basis, per-qubit wraps for X and Y.
* ``x-ladder``   -- an X-basis core (the Z ladder conjugated by H on every
  support qubit), then per-qubit switches X->Z via H and X->Y via S/S-dagger.
* ``mixed``      -- the core keeps Z factors bare and puts X legs only where
  the string carries X or Y, so only the Y qubits need an extra S wrap.

All three produce the same unitary; they differ (at most) in gate sequence.
Wraps are emitted per support qubit in ascending order on both sides of the
ladder, which fixes a deterministic gate order for golden tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .circuit import Gate, QuantumCircuit, cancel_adjacent
from .paulis import Hamiltonian, PauliOp, PauliString, PauliTerm


class SynthVariant(Enum):
    Z_LADDER = "z-ladder"
    X_LADDER = "x-ladder"
    MIXED = "mixed"


@dataclass(frozen=True)
class EvolutionParams:
    """Evolution angle t and the Trotter slice count."""

    t: float
    reps: int = 1

    def __post_init__(self) -> None:
        if not math.isfinite(self.t):
            raise ValueError("t must be finite")
        if self.reps < 1:
            raise ValueError("reps must be at least 1")


def synth_z_rotation(n_qubits: int, support: Sequence[int], theta: float) -> QuantumCircuit:
    """CNOT-ladder circuit for exp(-i*(theta/2)*Z_support).

    For support [q1 < q2 < ... < qk] the gates are CX(qk, qk-1), ...,
    CX(q2, q1), RZ(q1, theta), then the mirrored CX sequence: the chain
    folds the joint parity onto q1, where one RZ applies the phase.
    """
    support = tuple(support)
    if not support:
        raise ValueError("support must not be empty")
    if any(b <= a for a, b in zip(support, support[1:])):
        raise ValueError(f"support must be strictly ascending, got {support}")
    if support[0] < 0 or support[-1] >= n_qubits:
        raise ValueError(f"support {support} out of range for {n_qubits} qubits")

    down = [Gate.cx(support[i], support[i - 1]) for i in range(len(support) - 1, 0, -1)]
    up = [Gate.cx(support[i], support[i - 1]) for i in range(1, len(support))]
    return QuantumCircuit(n_qubits, (*down, Gate.rz(support[0], theta), *up))


def _wrap_layers(
    string: PauliString, support: tuple[int, ...], variant: SynthVariant
) -> list[tuple[list[Gate], list[Gate]]]:
    """Basis-change layers, innermost first, as (pre, post) gate lists."""
    if variant is SynthVariant.Z_LADDER:
        pre: list[Gate] = []
        post: list[Gate] = []
        for k in support:
            if string[k] is PauliOp.X:
                pre.append(Gate.h(k))
                post.append(Gate.h(k))
            elif string[k] is PauliOp.Y:
                pre += [Gate.sdg(k), Gate.h(k)]
                post += [Gate.h(k), Gate.s(k)]
        return [(pre, post)]

    if variant is SynthVariant.X_LADDER:
        x_legs = support
        outer_pre, outer_post = [], []
        for k in support:
            if string[k] is PauliOp.Z:
                outer_pre.append(Gate.h(k))
                outer_post.append(Gate.h(k))
            elif string[k] is PauliOp.Y:
                outer_pre.append(Gate.sdg(k))
                outer_post.append(Gate.s(k))
    else:  # MIXED: X legs only where the string has X or Y
        x_legs = tuple(k for k in support if string[k] in (PauliOp.X, PauliOp.Y))
        outer_pre = [Gate.sdg(k) for k in support if string[k] is PauliOp.Y]
        outer_post = [Gate.s(k) for k in support if string[k] is PauliOp.Y]

    inner = [Gate.h(k) for k in x_legs]
    return [(inner, list(inner)), (outer_pre, outer_post)]


def exp_pauli_term(term: PauliTerm, t: float, variant: SynthVariant) -> QuantumCircuit:
    """Circuit whose unitary equals exp(-i*t*w*P) for the weighted string w*P.

    The identity string has no gates at all; its exponential is the pure
    phase exp(-i*t*w), tracked in global_phase so nothing is silently
    dropped.
    """
    if not math.isfinite(t):
        raise ValueError("t must be finite")
    n = term.n_qubits
    support = term.string.support
    if not support:
        return QuantumCircuit(n, (), global_phase=-t * term.coefficient)

    ladder = synth_z_rotation(n, support, 2.0 * t * term.coefficient)
    gates = list(ladder.gates)
    for pre, post in _wrap_layers(term.string, support, variant):
        gates = pre + gates + post
    return QuantumCircuit(n, tuple(gates))


def trotter_circuit(
    h: Hamiltonian,
    params: EvolutionParams,
    variant: SynthVariant = SynthVariant.Z_LADDER,
    compact: bool = False,
) -> QuantumCircuit:
    """First-order Trotter product for exp(-i*t*H), H a sum of weighted strings.

    Concatenates exp_pauli_term(term, t/reps, variant) over the terms in
    stored order, repeated reps times. Exact for a single term; otherwise
    the error shrinks like 1/reps. With ``compact`` the result is run
    through :func:`cancel_adjacent`, which merges the rotations of adjacent
    identical slices.
    """
    slice_t = params.t / params.reps
    gates: list[Gate] = []
    phase = 0.0
    for _ in range(params.reps):
        for term in h.terms:
            piece = exp_pauli_term(term, slice_t, variant)
            gates.extend(piece.gates)
            phase += piece.global_phase
    circuit = QuantumCircuit(h.n_qubits, tuple(gates), phase)
    return cancel_adjacent(circuit) if compact else circuit
