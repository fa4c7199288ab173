"""Staged circuit engine: operator expansion onto arbitrary wires, stage
execution, and exact forward/backward stepping via snapshot history.

Wire convention: wire 0 is the most significant bit of the basis-state
index, so the basis index of |b0 b1 ... b(n-1)> is the binary number
b0b1...b(n-1). A gate's first input (`wires[0]`) is its most significant
wire.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError, NavigationError, RangeError, StateError
from .gates import Gate
from .linalg import Matrix
from .qobj import QuantumObject, qo

#: largest qubit count for which dense 2^n x 2^n operators are materialized
DENSE_OPERATOR_MAX_QUBITS = 12
#: largest qubit count for statevector-only execution
STATEVECTOR_MAX_QUBITS = 20


@dataclass(frozen=True)
class StageOp:
    """One column of the circuit diagram.

    Three forms:
      * plain: `gate` on exactly `gate.arity` wires;
      * broadcast: a 1-qubit `gate` repeated on every listed wire;
      * composite: `gate` is None and `parts` holds a fixed sub-sequence,
        presented (and stepped) as a single stage.
    """

    gate: Gate | None
    wires: tuple[int, ...]
    label: str = field(default="", compare=False)
    broadcast: bool = False
    parts: tuple["StageOp", ...] = ()

    def __post_init__(self):
        wires = tuple(int(w) for w in self.wires)
        object.__setattr__(self, "wires", wires)
        if len(set(wires)) != len(wires):
            raise RangeError(f"stage wires must be distinct, got {wires}")
        if any(w < 0 for w in wires):
            raise RangeError(f"stage wires must be >= 0, got {wires}")
        if self.gate is None:
            if not self.parts:
                raise StateError("composite stage needs at least one part")
        elif self.broadcast:
            if self.gate.arity != 1:
                raise StateError(f"broadcast stages take 1-qubit gates, got {self.gate.name}")
            if not wires:
                raise StateError("broadcast stage needs at least one wire")
            if len(wires) == 1:
                # a one-wire broadcast is a plain application
                object.__setattr__(self, "broadcast", False)
        elif len(wires) != self.gate.arity:
            raise StateError(
                f"gate {self.gate.name} has arity {self.gate.arity}, got {len(wires)} wires"
            )
        if not self.label:
            object.__setattr__(self, "label", self.gate.name if self.gate else "composite")

    @classmethod
    def single(cls, gate: Gate, wires, label: str = "") -> "StageOp":
        return cls(gate, tuple(wires), label)

    @classmethod
    def broadcast_on(cls, gate: Gate, wires, label: str = "") -> "StageOp":
        return cls(gate, tuple(wires), label, broadcast=True)

    @classmethod
    def composite(cls, label: str, parts, wires=None) -> "StageOp":
        parts = tuple(parts)
        if wires is None:
            wires = tuple(sorted({w for p in parts for w in p.wires}))
        return cls(None, tuple(wires), label, parts=parts)


@dataclass(frozen=True)
class Circuit:
    """An ordered stage list over a fixed number of wires."""

    qubit_count: int
    stages: tuple[StageOp, ...]
    name: str = field(default="", compare=False)
    measure: bool = False

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple(self.stages))
        if self.qubit_count < 1:
            raise StateError(f"qubit count must be >= 1, got {self.qubit_count}")
        for stage in self.stages:
            for op in (stage, *stage.parts):
                for w in op.wires:
                    if w >= self.qubit_count:
                        raise RangeError(
                            f"stage {op.label!r} uses wire {w}, circuit has {self.qubit_count}"
                        )

    @property
    def stage_count(self) -> int:
        return len(self.stages)

    @property
    def stage_labels(self) -> list[str]:
        return [s.label for s in self.stages]


@dataclass(frozen=True)
class Snapshot:
    """State after `stage_index` stages (0 = the initial state)."""

    stage_index: int
    state: QuantumObject


def _check_dense_cap(n: int):
    if n > DENSE_OPERATOR_MAX_QUBITS:
        raise CapacityError(
            f"dense operator on {n} qubits exceeds the cap of {DENSE_OPERATOR_MAX_QUBITS}; "
            "apply gates to the statevector instead"
        )


def expand_operator(gate: Gate, wires, n: int) -> Matrix:
    """Dense 2^n x 2^n unitary acting as `gate` on `wires`, identity elsewhere.

    Built as kron(gate, I) conjugated by the index-bit permutation that
    routes the listed wires to the leading positions.
    """
    wires = tuple(int(w) for w in wires)
    if len(wires) != gate.arity:
        raise StateError(f"gate {gate.name} has arity {gate.arity}, got {len(wires)} wires")
    if len(set(wires)) != len(wires) or any(not 0 <= w < n for w in wires):
        raise RangeError(f"invalid wires {wires} for {n} qubits")
    _check_dense_cap(n)
    a = gate.arity
    base = np.kron(gate.matrix, np.eye(2 ** (n - a), dtype=np.complex128))
    if wires == tuple(range(a)):
        return base
    # perm[k] = source axis landing at position k
    perm = [-1] * n
    for j, w in enumerate(wires):
        perm[w] = j
    spare = iter(range(a, n))
    for k in range(n):
        if perm[k] < 0:
            perm[k] = next(spare)
    t = base.reshape([2] * (2 * n))
    t = t.transpose(perm + [n + p for p in perm])
    return np.ascontiguousarray(t.reshape(2**n, 2**n))


def apply_gate_statevector(vec: np.ndarray, matrix: Matrix, wires, n: int) -> np.ndarray:
    """Apply a 2^a x 2^a matrix to the listed wires of a 2^n state vector.

    Equals multiplication by `expand_operator` without materializing it.
    """
    wires = list(wires)
    a = len(wires)
    g = np.asarray(matrix, dtype=np.complex128).reshape([2] * (2 * a))
    t = vec.reshape([2] * n)
    t = np.tensordot(g, t, axes=(list(range(a, 2 * a)), wires))
    t = np.moveaxis(t, range(a), wires)
    return np.ascontiguousarray(t.reshape(-1))


def apply_stage(vec: np.ndarray, stage: StageOp, n: int) -> np.ndarray:
    """Statevector fast path for one stage of any form."""
    if stage.parts:
        for part in stage.parts:
            vec = apply_stage(vec, part, n)
        return vec
    if stage.broadcast:
        for w in stage.wires:
            vec = apply_gate_statevector(vec, stage.gate.matrix, [w], n)
        return vec
    return apply_gate_statevector(vec, stage.gate.matrix, stage.wires, n)


def stage_operator(stage: StageOp, n: int) -> Matrix:
    """Dense operator of a stage (parts compose left-to-right in time)."""
    _check_dense_cap(n)
    if stage.parts:
        op = np.eye(2**n, dtype=np.complex128)
        for part in stage.parts:
            op = stage_operator(part, n) @ op
        return op
    if stage.broadcast:
        op = np.eye(2**n, dtype=np.complex128)
        for w in stage.wires:
            op = expand_operator(stage.gate, [w], n) @ op
        return op
    return expand_operator(stage.gate, stage.wires, n)


def _as_state_vector(initial, n: int) -> np.ndarray:
    dim = 2**n
    if initial is None:
        vec = np.zeros(dim, dtype=np.complex128)
        vec[0] = 1.0
        return vec
    data = initial.data if isinstance(initial, QuantumObject) else np.asarray(initial, dtype=np.complex128)
    vec = data.reshape(-1).astype(np.complex128)
    if vec.size != dim:
        raise StateError(f"initial state has dimension {vec.size}, circuit needs {dim}")
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > 1e-10:
        raise StateError(f"initial state is not normalized: norm is {norm}")
    return vec


def _snapshot(stage_index: int, vec: np.ndarray) -> Snapshot:
    return Snapshot(stage_index, qo(vec.reshape(-1, 1)))


class ExecSession:
    """Single-owner stepping session over a circuit.

    Backward steps restore snapshots bit-exactly from history; nothing is
    recomputed by inverse application.
    """

    def __init__(self, circuit: Circuit, initial=None):
        if circuit.qubit_count > STATEVECTOR_MAX_QUBITS:
            raise CapacityError(
                f"circuit has {circuit.qubit_count} qubits, simulation cap is {STATEVECTOR_MAX_QUBITS}"
            )
        self.circuit = circuit
        self.history: list[Snapshot] = [_snapshot(0, _as_state_vector(initial, circuit.qubit_count))]

    @property
    def cursor(self) -> int:
        return len(self.history) - 1

    @property
    def stage_count(self) -> int:
        return self.circuit.stage_count

    @property
    def state(self) -> QuantumObject:
        return self.history[-1].state

    def step_forward(self) -> "ExecSession":
        if self.cursor >= self.stage_count:
            raise NavigationError(f"already at the final stage ({self.stage_count})")
        stage = self.circuit.stages[self.cursor]
        vec = apply_stage(self.state.data.reshape(-1).copy(), stage, self.circuit.qubit_count)
        self.history.append(_snapshot(self.cursor + 1, vec))
        return self

    def step_backward(self) -> "ExecSession":
        if self.cursor == 0:
            raise NavigationError("already at the initial state")
        self.history.pop()
        return self

    def restart(self) -> "ExecSession":
        del self.history[1:]
        return self


def run_all(circuit: Circuit, initial=None) -> list[Snapshot]:
    """Snapshots for stages 0..K; equals folding step_forward."""
    session = ExecSession(circuit, initial)
    for _ in range(circuit.stage_count):
        session.step_forward()
    return list(session.history)


def format_ket_line(index: int, amp: complex, qubit_count: int) -> str:
    bits = format(index, f"0{qubit_count}b")
    # adding 0.0 folds negative zeros into +0.0 for stable text
    re, im = float(amp.real) + 0.0, float(amp.imag) + 0.0
    if im >= 0:
        return f"|{bits}⟩ {re!r} + {im!r}i"
    return f"|{bits}⟩ {re!r} - {-im!r}i"


def render_state_lines(vec, qubit_count: int, cutoff: float = 1e-12) -> list[str]:
    """One line per nonzero amplitude, '|bits> re +- im i' at full precision."""
    amps = np.asarray(vec, dtype=np.complex128).reshape(-1)
    return [
        format_ket_line(i, amps[i], qubit_count)
        for i in range(amps.size)
        if abs(amps[i]) >= cutoff
    ]


def render_snapshot(snap: Snapshot, qubit_count: int) -> str:
    return "\n".join(render_state_lines(snap.state.data, qubit_count))
