"""The standard gate set and controlled-gate construction.

Gate matrices follow the big-endian wire convention used everywhere in
the package: wire 0 is the leftmost ket symbol and the most significant
bit of the basis-state index, so CNOT's control is the first wire.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from . import linalg
from .errors import CapacityError, GateLookupError, StateError
from .linalg import Matrix
from .qobj import qstate

#: hard cap on total gate wires accepted by `controlled`
MAX_GATE_WIRES = 12


@dataclass(frozen=True, eq=False)
class Gate:
    """A named unitary acting on `arity` adjacent wires."""

    name: str
    arity: int
    matrix: Matrix

    def __post_init__(self):
        m = linalg.as_matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        dim = 2 ** self.arity
        if m.shape != (dim, dim):
            raise StateError(f"gate {self.name}: arity {self.arity} needs shape ({dim}, {dim}), got {m.shape}")
        if not linalg.is_unitary(m):
            raise StateError(f"gate {self.name}: matrix is not unitary within {linalg.UNITARY_TOL}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gate):
            return NotImplemented
        return (
            self.name == other.name
            and self.arity == other.arity
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self) -> int:
        return hash((self.name, self.arity))

    def __repr__(self) -> str:
        return f"Gate({self.name!r}, arity={self.arity})"


def _perm_matrix(size: int, swaps: list[tuple[int, int]]) -> Matrix:
    m = np.eye(size, dtype=np.complex128)
    for i, j in swaps:
        m[[i, j]] = m[[j, i]]
    return m


_INV_SQRT2 = 1 / sqrt(2)

_MATRICES: dict[str, tuple[int, Matrix]] = {
    "IDENTITY": (1, np.eye(2, dtype=np.complex128)),
    "NOT": (1, np.array([[0, 1], [1, 0]], dtype=np.complex128)),
    "PHASEFLIP": (1, np.array([[1, 0], [0, -1]], dtype=np.complex128)),
    "HADAMARD": (1, _INV_SQRT2 * np.array([[1, 1], [1, -1]], dtype=np.complex128)),
    # square-root-of-NOT exactly as tabulated; its square is [[0,-1],[1,0]]
    "SNOT": (1, _INV_SQRT2 * np.array([[1, -1], [1, 1]], dtype=np.complex128)),
    "CNOT": (2, _perm_matrix(4, [(2, 3)])),
    "SWAP": (2, _perm_matrix(4, [(1, 2)])),
    "TOFFOLI": (3, _perm_matrix(8, [(6, 7)])),
    "FREDKIN": (3, _perm_matrix(8, [(5, 6)])),
}

_ALIASES = {"XOR": "CNOT", "H": "HADAMARD", "X": "NOT", "Z": "PHASEFLIP"}

STANDARD_GATE_NAMES = tuple(_MATRICES)


def standard_gate(name: str) -> Gate:
    """Look up a gate from the standard table (case-insensitive, XOR = CNOT)."""
    key = name.strip().upper()
    key = _ALIASES.get(key, key)
    if key not in _MATRICES:
        raise GateLookupError(
            f"unknown gate {name!r}; valid names: {', '.join(STANDARD_GATE_NAMES)}"
        )
    arity, matrix = _MATRICES[key]
    return Gate(key, arity, matrix.copy())


def hadamard_operational() -> Gate:
    """Hadamard built from its outer-product definition rather than a table.

    H = ((|d> - |u>)<u| + (|d> + |u>)<d|) / sqrt(2), with d = down, u = up.
    """
    d, u = qstate("d").data, qstate("u").data
    result = linalg.linear_combine(
        1.0,
        linalg.kron(linalg.linear_combine(1.0, d, -1.0, u), linalg.transpose(u)),
        1.0,
        linalg.kron(linalg.linear_combine(1.0, d, 1.0, u), linalg.transpose(d)),
    )
    return Gate("HADAMARD", 1, result / sqrt(2))


def controlled(gate: Gate, n_controls: int) -> Gate:
    """Add control wires in front of a gate.

    The controls occupy the leading (most significant) wires: the result is
    the identity except on the all-controls-one subspace, where `gate` acts.
    """
    if n_controls < 1:
        raise StateError(f"n_controls must be >= 1, got {n_controls}")
    total = gate.arity + n_controls
    if total > MAX_GATE_WIRES:
        raise CapacityError(f"controlled gate would span {total} wires, cap is {MAX_GATE_WIRES}")
    dim, sub = 2**total, 2**gate.arity
    m = np.eye(dim, dtype=np.complex128)
    m[dim - sub :, dim - sub :] = gate.matrix
    return Gate("C" * n_controls + gate.name, total, m)
