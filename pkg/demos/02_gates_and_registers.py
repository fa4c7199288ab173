"""
Gates and registers
===================

The standard gate table, the outer-product construction of Hadamard,
controlled gates, and per-qubit register access with separability
tracking.
"""

import numpy as np

from qsim import (
    basis,
    controlled,
    hadamard_operational,
    is_unitary,
    qreg,
    standard_gate,
)

# The gate table holds IDENTITY, NOT, PHASEFLIP, HADAMARD, SNOT (square
# root of NOT), CNOT, SWAP, TOFFOLI, FREDKIN. All are unitary.
for name in ("IDENTITY", "NOT", "PHASEFLIP", "HADAMARD", "SNOT", "CNOT"):
    g = standard_gate(name)
    print(f"{g.name}: arity {g.arity}, unitary: {is_unitary(g.matrix)}")
print()

# Hadamard can also be assembled from its operational definition,
# H = ((|d> - |u>)<u| + (|d> + |u>)<d|) / sqrt(2). Both agree exactly.
h_table = standard_gate("HADAMARD").matrix
h_built = hadamard_operational().matrix
print("operational H equals the table:", np.array_equal(h_table, h_built))
print(h_built)
print()

# Controls go in front of any gate: one control on NOT gives CNOT,
# two controls give TOFFOLI.
print("controlled(NOT, 1) == CNOT:", np.array_equal(
    controlled(standard_gate("NOT"), 1).matrix, standard_gate("CNOT").matrix))
print("controlled(NOT, 2) == TOFFOLI:", np.array_equal(
    controlled(standard_gate("NOT"), 2).matrix, standard_gate("TOFFOLI").matrix))
print()

# A register tracks per-qubit factors while it remains a product state.
r = qreg(basis(2, 1), basis(2, 2))
print(r)
print("qubit 0:", r(0).data.ravel(), " qubit 1:", r(1).data.ravel())
print()

# Single-qubit gates keep the factors; entangling gates drop them, and
# per-qubit access then raises.
H = standard_gate("HADAMARD")
CNOT = standard_gate("CNOT")
bell = qreg(basis(2, 1), basis(2, 1)).apply(H, [0]).apply(CNOT, [0, 1])
print("Bell state:", bell.joint.data.ravel())
try:
    bell(0)
except Exception as err:
    print("per-qubit access:", err)
