"""Born-rule probabilities and seeded measurement sampling."""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, RangeError, StateError
from .linalg import UNITARY_TOL
from .qobj import QuantumObject


def _column(state) -> np.ndarray:
    data = state.data if isinstance(state, QuantumObject) else np.asarray(state, dtype=np.complex128)
    vec = data.reshape(-1)
    if data.ndim == 2 and data.shape[1] != 1:
        raise DimensionError(f"expected a column vector, got shape {data.shape}")
    return vec


def probabilities(state) -> np.ndarray:
    """Per-basis-state probabilities |amp|^2 of a unit column."""
    vec = _column(state)
    p = np.abs(vec) ** 2
    total = float(p.sum())
    if abs(total - 1.0) > UNITARY_TOL:
        raise StateError(f"state is not normalized: norm is {np.sqrt(total)}")
    return p


def marginal_probabilities(state, wires: list[int] | tuple[int, ...]) -> np.ndarray:
    """Probabilities marginalized onto `wires` (0-based, wire 0 = most significant).

    The result is indexed by the kept wires in the order given.
    """
    p = probabilities(state)
    n = p.size.bit_length() - 1
    if 2**n != p.size:
        raise DimensionError(f"state length {p.size} is not a power of two")
    wires = list(wires)
    if any(not 0 <= w < n for w in wires):
        raise RangeError(f"wire index out of range 0..{n - 1}: {wires}")
    if len(set(wires)) != len(wires):
        raise RangeError(f"duplicate wires in {wires}")
    grid = p.reshape([2] * n)
    drop = tuple(ax for ax in range(n) if ax not in wires)
    kept = grid.sum(axis=drop) if drop else grid
    # axes of `kept` follow increasing wire order; reorder to the requested one
    order = [sorted(wires).index(w) for w in wires]
    return kept.transpose(order).reshape(-1)


def sample_measurement(state, seed: int, shots: int) -> dict[int, int]:
    """Multinomial sample of `shots` outcomes; deterministic for a fixed seed.

    Returns counts per basis-state index, omitting zero-count outcomes.
    """
    if shots < 1:
        raise RangeError(f"shots must be >= 1, got {shots}")
    p = probabilities(state)
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, p / p.sum())
    return {int(i): int(c) for i, c in enumerate(counts) if c > 0}
