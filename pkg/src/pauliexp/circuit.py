"""Gate-level intermediate representation.

The gate alphabet is fixed: H, S, S-dagger, RZ, RX, CX, CZ. A circuit is an
ordered gate sequence (first gate applies first to the state) plus a tracked
global phase, so the represented unitary is
``exp(i * global_phase) * G_last @ ... @ G_first``.

Rotation conventions, fixed once for the whole package:

    RZ(theta) = diag(exp(-i*theta/2), exp(+i*theta/2))
    RX(theta) = [[cos(theta/2), -i*sin(theta/2)],
                 [-i*sin(theta/2), cos(theta/2)]]

so exp(-i*t*Z) == RZ(2t) and exp(-i*t*X) == RX(2t). CX(a, b) is control a,
target b; CZ is symmetric and stores its pair in ascending order.

Circuits are immutable values: ``append``, ``dagger`` and ``cancel_adjacent``
all return new circuits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

H = "h"
S = "s"
SDG = "sdg"
RZ = "rz"
RX = "rx"
CX = "cx"
CZ = "cz"

GATE_KINDS = (CX, CZ, RZ, RX, H, S, SDG)

_SINGLE = frozenset({H, S, SDG, RZ, RX})
_ROTATIONS = frozenset({RZ, RX})
_INVERSE_KIND = {H: H, S: SDG, SDG: S, CX: CX, CZ: CZ}


@dataclass(frozen=True)
class Gate:
    """One gate application: kind, qubit tuple, and angle for rotations."""

    kind: str
    qubits: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        expected = 1 if self.kind in _SINGLE else 2
        if len(self.qubits) != expected:
            raise ValueError(f"{self.kind} takes {expected} qubit(s), got {self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"negative qubit index in {self.qubits}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"repeated qubit index in {self.qubits}")
        if self.kind in _ROTATIONS:
            if self.angle is None or not math.isfinite(self.angle):
                raise ValueError(f"{self.kind} needs a finite angle, got {self.angle!r}")
            object.__setattr__(self, "angle", float(self.angle))
        elif self.angle is not None:
            raise ValueError(f"{self.kind} takes no angle")

    @staticmethod
    def h(q: int) -> Gate:
        return Gate(H, (q,))

    @staticmethod
    def s(q: int) -> Gate:
        return Gate(S, (q,))

    @staticmethod
    def sdg(q: int) -> Gate:
        return Gate(SDG, (q,))

    @staticmethod
    def rz(q: int, angle: float) -> Gate:
        return Gate(RZ, (q,), angle)

    @staticmethod
    def rx(q: int, angle: float) -> Gate:
        return Gate(RX, (q,), angle)

    @staticmethod
    def cx(control: int, target: int) -> Gate:
        return Gate(CX, (control, target))

    @staticmethod
    def cz(a: int, b: int) -> Gate:
        # symmetric gate, canonical ascending order
        return Gate(CZ, (min(a, b), max(a, b)))

    def dagger(self) -> Gate:
        if self.kind in _ROTATIONS:
            assert self.angle is not None
            return Gate(self.kind, self.qubits, -self.angle)
        return Gate(_INVERSE_KIND[self.kind], self.qubits)

    def __repr__(self) -> str:
        args = ", ".join(str(q) for q in self.qubits)
        if self.angle is not None:
            return f"{self.kind}({args}; {self.angle})"
        return f"{self.kind}({args})"


@dataclass(frozen=True)
class QuantumCircuit:
    """Ordered gate sequence over ``n_qubits`` with a tracked global phase."""

    n_qubits: int
    gates: tuple[Gate, ...] = field(default=())
    global_phase: float = 0.0

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        object.__setattr__(self, "gates", tuple(self.gates))
        for gate in self.gates:
            self._check_bounds(gate)
        if not math.isfinite(self.global_phase):
            raise ValueError("global_phase must be finite")

    def _check_bounds(self, gate: Gate) -> None:
        for q in gate.qubits:
            if q >= self.n_qubits:
                raise ValueError(
                    f"gate {gate!r} touches qubit {q}, circuit has {self.n_qubits}"
                )

    def append(self, gate: Gate) -> QuantumCircuit:
        """New circuit with ``gate`` appended; self is unchanged."""
        self._check_bounds(gate)
        return QuantumCircuit(self.n_qubits, self.gates + (gate,), self.global_phase)

    def dagger(self) -> QuantumCircuit:
        """Circuit whose unitary is the conjugate transpose of this one's."""
        return QuantumCircuit(
            self.n_qubits,
            tuple(g.dagger() for g in reversed(self.gates)),
            -self.global_phase,
        )

    def gate_counts(self) -> dict[str, int]:
        """Histogram over the full gate alphabet (zero entries included)."""
        counts = {kind: 0 for kind in GATE_KINDS}
        for gate in self.gates:
            counts[gate.kind] += 1
        return counts

    def __len__(self) -> int:
        return len(self.gates)


def _last_overlapping(kept: list[Gate], qubits: tuple[int, ...]) -> int:
    """Index of the latest kept gate touching any of ``qubits``, or -1."""
    wanted = set(qubits)
    for j in range(len(kept) - 1, -1, -1):
        if wanted.intersection(kept[j].qubits):
            return j
    return -1


def _cancel_pass(gates: tuple[Gate, ...]) -> list[Gate]:
    kept: list[Gate] = []
    for gate in gates:
        j = _last_overlapping(kept, gate.qubits)
        if j < 0:
            kept.append(gate)
            continue
        prev = kept[j]
        if prev.qubits == gate.qubits and _INVERSE_KIND.get(prev.kind) == gate.kind:
            kept.pop(j)
        elif gate.kind in _ROTATIONS and prev.kind == gate.kind and prev.qubits == gate.qubits:
            assert prev.angle is not None and gate.angle is not None
            merged = prev.angle + gate.angle
            if merged == 0.0:
                kept.pop(j)
            else:
                kept[j] = Gate(gate.kind, gate.qubits, merged)
        else:
            kept.append(gate)
    return kept


def cancel_adjacent(circuit: QuantumCircuit) -> QuantumCircuit:
    """Peephole compaction: drop adjacent inverse pairs, merge adjacent rotations.

    Two gates are adjacent when no gate between them touches any of their
    qubits. Inverse pairs (H,H), (S,Sdg), (Sdg,S), (CX,CX), (CZ,CZ) on the
    identical qubit tuple vanish; adjacent RZ/RX on the same qubit merge by
    summing angles, disappearing only when the sum is exactly 0.0. Runs to a
    fixed point; the represented unitary (global phase included) is unchanged.
    """
    gates = circuit.gates
    while True:
        compacted = tuple(_cancel_pass(gates))
        if compacted == gates:
            break
        gates = compacted
    return QuantumCircuit(circuit.n_qubits, gates, circuit.global_phase)
