"""
Circuit files, sampling, and diagrams
=====================================

The plain-text .qc format round-trips through the parser; measurement
sampling is seeded and reproducible; states render as SVG bar charts.
"""

import json

from qsim import parse, probabilities, run_all, sample_measurement, serialize
from qsim.diagram import amplitudes_to_json, render_svg

source = """
qreg q[2];      // two wires
H(q);           // broadcast Hadamard over the register
CPHASE(q[0], q[1]);
H(q);
measure;
"""

circuit = parse(source)
print("parsed stages:", [s.label for s in circuit.stages])
print("canonical text:", serialize(circuit))
print()

# Execute from |00> and look at the final distribution.
snapshots = run_all(circuit)
final = snapshots[-1].state
print("final probabilities:", probabilities(final))

# Sampling is a seeded multinomial draw: same seed, same histogram.
hist = sample_measurement(final, seed=5, shots=2000)
print("2000 shots:", hist)
assert hist == sample_measurement(final, seed=5, shots=2000)
print()

# The CLI's diagram subcommand consumes this JSON schema; the renderer
# is available directly as well.
payload = {"qubits": 2, "amplitudes": amplitudes_to_json(final.data)}
print("state JSON:", json.dumps(payload))
svg = render_svg(payload["qubits"], final.data)
with open("final_state.svg", "w", encoding="utf-8") as fh:
    fh.write(svg)
print("wrote final_state.svg,", len(svg), "bytes")
