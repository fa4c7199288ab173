"""
Grover search, traced stage by stage
====================================

Search four items for a chosen index with two data qubits and one
ancilla. The 16-stage circuit applies the oracle at stage 5; the trace
records every intermediate state and the data-register probabilities.
"""

from qsim import GroverSpec, diffusion_operator, grover_trace, optimal_iterations, oracle_operator, render_snapshot

spec = GroverSpec(data_qubits=2, target=2, iterations=2)
trace = grover_trace(spec)

print("stages:", trace.circuit.stage_count, "labels:", trace.circuit.stage_labels)
print()

# The first two stages spread the data register into a superposition.
for stage in (1, 2):
    print(f"state after stage {stage}:")
    print(render_snapshot(trace.snapshots[stage], 3))
    print()

# The reflections behind the iteration: the oracle flips the target's
# sign, the diffusion operator inverts about the mean.
print("oracle (k=2, target=2):")
print(oracle_operator(2, 2).real)
print("diffusion (k=2):")
print(diffusion_operator(2).real)
print()

# One iteration already finds the target with certainty for N = 4;
# running a second iteration overshoots back down to 0.25.
for j, p in trace.iteration_checkpoints():
    print(f"target probability after iteration {j}: {p:.12f}")
print("optimal iteration count for N=4:", optimal_iterations(4))
print("optimal iteration count for N=16:", optimal_iterations(16))
