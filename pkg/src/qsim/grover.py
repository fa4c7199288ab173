"""Grover database search over N = 2^k items.

The searched register holds k data wires plus one ancilla wire. The phase
oracle is realized by kickback: the ancilla is prepared in |->, and a
NOT-conjugated k-controlled NOT flips the sign of the target's amplitude.
Each iteration contributes six stages (oracle plus the five diffusion
stages); for k = 2 with two iterations the circuit has 16 stages and the
oracle sits at stage 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import asin, ceil, pi, sin, sqrt

import numpy as np

from .circuit import Circuit, ExecSession, Snapshot, StageOp
from .errors import RangeError
from .gates import controlled, standard_gate
from .linalg import Matrix
from .measure import marginal_probabilities


@dataclass(frozen=True)
class GroverSpec:
    """Search with N = 2^data_qubits items for 0-based index `target`."""

    data_qubits: int
    target: int
    iterations: int = 1

    def __post_init__(self):
        if self.data_qubits < 1:
            raise RangeError(f"data_qubits must be >= 1, got {self.data_qubits}")
        if not 0 <= self.target < 2**self.data_qubits:
            raise RangeError(
                f"target {self.target} out of range 0..{2 ** self.data_qubits - 1}"
            )
        if self.iterations < 1:
            raise RangeError(f"iterations must be >= 1, got {self.iterations}")

    @property
    def item_count(self) -> int:
        return 2**self.data_qubits


def oracle_operator(target: int, data_qubits: int) -> Matrix:
    """I - 2|w><w|: diagonal reflection putting -1 on the target index."""
    n = 2**data_qubits
    if not 0 <= target < n:
        raise RangeError(f"target {target} out of range 0..{n - 1}")
    m = np.eye(n, dtype=np.complex128)
    m[target, target] = -1.0
    return m


def diffusion_operator(data_qubits: int) -> Matrix:
    """2|p0><p0| - I: reflection about the uniform superposition."""
    if data_qubits < 1:
        raise RangeError(f"data_qubits must be >= 1, got {data_qubits}")
    n = 2**data_qubits
    return np.full((n, n), 2.0 / n, dtype=np.complex128) - np.eye(n, dtype=np.complex128)


def success_probability(item_count: int, iterations: int) -> float:
    """Analytic target probability sin^2((2j+1) asin(1/sqrt(N))) after j iterations."""
    theta = asin(1.0 / sqrt(item_count))
    return sin((2 * iterations + 1) * theta) ** 2


def optimal_iterations(item_count: int) -> int:
    """Iteration count maximizing the analytic success probability.

    Brute-forced over 1..ceil(pi/4 sqrt(N)) + 1 rather than rounding
    pi/4 sqrt(N): for N = 4 the success probability is exactly 1 at j = 1,
    which blind rounding misses.
    """
    if item_count < 2:
        raise RangeError(f"item_count must be >= 2, got {item_count}")
    upper = ceil(pi / 4 * sqrt(item_count)) + 1
    best, best_p = 1, -1.0
    for j in range(1, upper + 1):
        p = success_probability(item_count, j)
        if p > best_p + 1e-15:
            best, best_p = j, p
    return best


def _not_stage(wire: int) -> StageOp:
    return StageOp.single(standard_gate("NOT"), (wire,), "NOT")


def _oracle_stage(spec: GroverSpec) -> StageOp:
    """NOT-conjugated k-controlled NOT onto the ancilla, as one stage."""
    k = spec.data_qubits
    flips = [w for w in range(k) if not (spec.target >> (k - 1 - w)) & 1]
    kicker = StageOp.single(
        controlled(standard_gate("NOT"), k), tuple(range(k + 1)), "C" * k + "NOT"
    )
    parts = [_not_stage(w) for w in flips] + [kicker] + [_not_stage(w) for w in flips]
    return StageOp.composite("oracle", parts, wires=tuple(range(k + 1)))


def _phase_core_stage(data_qubits: int) -> StageOp:
    """Phase -1 on the all-ones data state (controlled phase flip)."""
    z = standard_gate("PHASEFLIP")
    if data_qubits == 1:
        return StageOp.single(z, (0,), "CPHASE")
    gate = controlled(z, data_qubits - 1)
    return StageOp.single(gate, tuple(range(data_qubits)), "CPHASE")


def grover_circuit(spec: GroverSpec) -> Circuit:
    """The staged search circuit on k data wires plus one ancilla wire.

    Layout: one H stage per data wire, NOT then H on the ancilla, then per
    iteration [oracle, H*, NOT*, CPHASE, NOT*, H*] with the starred stages
    broadcast over the data wires.
    """
    k = spec.data_qubits
    h = standard_gate("HADAMARD")
    data = tuple(range(k))
    stages: list[StageOp] = [StageOp.single(h, (w,), "H") for w in data]
    stages += [_not_stage(k), StageOp.single(h, (k,), "H")]
    for _ in range(spec.iterations):
        stages += [
            _oracle_stage(spec),
            StageOp.broadcast_on(h, data, "H"),
            StageOp.broadcast_on(standard_gate("NOT"), data, "NOT"),
            _phase_core_stage(k),
            StageOp.broadcast_on(standard_gate("NOT"), data, "NOT"),
            StageOp.broadcast_on(h, data, "H"),
        ]
    name = f"grover k={k} target={spec.target} iterations={spec.iterations}"
    return Circuit(k + 1, tuple(stages), name)


@dataclass(frozen=True)
class GroverTrace:
    """Stage-by-stage snapshots plus data-register marginals."""

    spec: GroverSpec
    circuit: Circuit
    snapshots: tuple[Snapshot, ...]
    data_probabilities: tuple[np.ndarray, ...]

    @property
    def prep_stage_count(self) -> int:
        return self.spec.data_qubits + 2

    def target_probability_after_iteration(self, iteration: int) -> float:
        """Data-register probability of the target after a full iteration."""
        if not 1 <= iteration <= self.spec.iterations:
            raise RangeError(f"iteration {iteration} out of range 1..{self.spec.iterations}")
        stage = self.prep_stage_count + 6 * iteration
        return float(self.data_probabilities[stage][self.spec.target])

    def iteration_checkpoints(self) -> list[tuple[int, float]]:
        return [
            (j, self.target_probability_after_iteration(j))
            for j in range(1, self.spec.iterations + 1)
        ]


def grover_trace(spec: GroverSpec) -> GroverTrace:
    """Run the circuit from |0...0> and marginalize out the ancilla per stage."""
    circuit = grover_circuit(spec)
    session = ExecSession(circuit)
    data_wires = tuple(range(spec.data_qubits))
    marginals = [marginal_probabilities(session.state, data_wires)]
    for _ in range(circuit.stage_count):
        session.step_forward()
        marginals.append(marginal_probabilities(session.state, data_wires))
    return GroverTrace(spec, circuit, tuple(session.history), tuple(marginals))
