"""Quantum registers: joint statevector plus per-qubit factors while the
register is still a known tensor product.

Factor tracking is conservative: a single-qubit gate updates the affected
factor in place, any multi-qubit gate drops the factors entirely.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .circuit import apply_gate_statevector
from .errors import RangeError, SeparabilityError, StateError
from .gates import Gate
from .qobj import QuantumObject, format_amplitude, qo, tensor_objects


def _check_qubit(q: QuantumObject, position: int):
    if q.shape != (2, 1):
        raise StateError(f"register member {position} must be a 2-dimensional column, got {q.shape}")
    norm = float(np.linalg.norm(q.data))
    if abs(norm - 1.0) > 1e-10:
        raise StateError(f"register member {position} is not normalized: norm is {norm}")


@dataclass(frozen=True, eq=False)
class QuantumRegister:
    """n qubits as one 2^n joint column; factors kept while separable."""

    qubit_count: int
    joint: QuantumObject
    factors: tuple[QuantumObject, ...] | None

    def get(self, wire: int) -> QuantumObject:
        """The stored single-qubit factor at a 0-based wire index."""
        if not 0 <= wire < self.qubit_count:
            raise RangeError(f"wire {wire} out of range 0..{self.qubit_count - 1}")
        if self.factors is None:
            raise SeparabilityError(
                "register is no longer a known tensor product; per-qubit access is unavailable"
            )
        return self.factors[wire]

    def __call__(self, wire: int) -> QuantumObject:
        return self.get(wire)

    def apply(self, gate: Gate, wires) -> "QuantumRegister":
        """New register with `gate` applied to `wires` of the joint state."""
        wires = tuple(int(w) for w in wires)
        if len(wires) != gate.arity:
            raise StateError(f"gate {gate.name} has arity {gate.arity}, got {len(wires)} wires")
        if any(not 0 <= w < self.qubit_count for w in wires):
            raise RangeError(f"invalid wires {wires} for {self.qubit_count} qubits")
        vec = apply_gate_statevector(
            self.joint.data.reshape(-1).copy(), gate.matrix, wires, self.qubit_count
        )
        factors = None
        if gate.arity == 1 and self.factors is not None:
            updated = qo(linalg.mat_mul(gate.matrix, self.factors[wires[0]].data))
            factors = tuple(
                updated if i == wires[0] else f for i, f in enumerate(self.factors)
            )
        return QuantumRegister(self.qubit_count, qo(vec.reshape(-1, 1)), factors)

    def __str__(self) -> str:
        header = (
            f"Register containing {self.qubit_count} qubits, "
            f"Hilbert space dimensions [ {self.joint.shape[0]} ] by [ 1 ]"
        )
        lines = [format_amplitude(z) for z in self.joint.data[:, 0]]
        return "\n".join([header, *lines])


def qreg(*qubits: QuantumObject) -> QuantumRegister:
    """Register from single-qubit unit columns; the joint state is their tensor."""
    if len(qubits) == 1 and isinstance(qubits[0], (list, tuple)):
        qubits = tuple(qubits[0])
    if not qubits:
        raise StateError("qreg needs at least one qubit")
    for i, q in enumerate(qubits):
        _check_qubit(q, i)
    joint = tensor_objects(*qubits) if len(qubits) > 1 else qubits[0]
    return QuantumRegister(len(qubits), qo(joint.data), tuple(qubits))
