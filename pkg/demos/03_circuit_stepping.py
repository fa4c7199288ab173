"""
Stepping through a circuit
==========================

Circuits are ordered stages; a session steps them forward and backward.
Backward steps restore snapshots from history bit-exactly instead of
applying inverse gates.
"""

import numpy as np

from qsim import Circuit, ExecSession, StageOp, expand_operator, render_snapshot, standard_gate

H = standard_gate("HADAMARD")
CNOT = standard_gate("CNOT")

# A Bell-pair circuit: H on wire 0, then CNOT with control 0.
circuit = Circuit(2, (
    StageOp.single(H, (0,), "H"),
    StageOp.single(CNOT, (0, 1), "CNOT"),
), name="bell")

session = ExecSession(circuit)
print("initial:")
print(render_snapshot(session.history[0], 2))

session.step_forward()
print("\nafter H:")
print(render_snapshot(session.history[-1], 2))

session.step_forward()
print("\nafter CNOT:")
print(render_snapshot(session.history[-1], 2))

# Step back: the earlier state returns bit-for-bit.
before = session.history[1].state.data.copy()
session.step_backward()
print("\nbackward restores exactly:", np.array_equal(session.state.data, before))

# A gate on chosen wires of a larger register is the same operator the
# dense expansion builds; the engine just never materializes it.
u = expand_operator(CNOT, [0, 1], 2)
print("\ndense CNOT expansion:")
print(u.real.astype(int))

# Gates land on arbitrary wires: control on wire 1, target on wire 0.
print("\nreversed CNOT (control on wire 1):")
print(expand_operator(CNOT, [1, 0], 2).real.astype(int))
