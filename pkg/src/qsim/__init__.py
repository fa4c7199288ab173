"""Statevector quantum-circuit simulator with stage stepping.

The layers, bottom up: dense complex linear algebra (`linalg`),
quantum objects and registers (`qobj`, `register`), the gate set
(`gates`), Born-rule measurement (`measure`), the staged execution
engine (`circuit`), Grover search (`grover`), the `.qc` text format
(`dsl`), amplitude diagrams (`diagram`), and the CLI / HTTP front ends
(`cli`, `service`).
"""

from .circuit import (
    Circuit,
    ExecSession,
    Snapshot,
    StageOp,
    expand_operator,
    render_snapshot,
    render_state_lines,
    run_all,
)
from .dsl import parse, serialize
from .errors import (
    CapacityError,
    DimensionError,
    GateLookupError,
    MetadataError,
    NavigationError,
    ParseError,
    QsimError,
    RangeError,
    SeparabilityError,
    SourceSpan,
    StateError,
    UnsupportedConstructError,
)
from .gates import Gate, controlled, hadamard_operational, standard_gate
from .grover import (
    GroverSpec,
    GroverTrace,
    diffusion_operator,
    grover_circuit,
    grover_trace,
    optimal_iterations,
    oracle_operator,
)
from .linalg import (
    col,
    dagger,
    identity,
    inner,
    is_unitary,
    kron,
    linear_combine,
    mat_mul,
    row,
    transpose,
)
from .measure import marginal_probabilities, probabilities, sample_measurement
from .qobj import QuantumObject, basis, qo, qstate, tensor, tensor_objects
from .register import QuantumRegister, qreg

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "ExecSession",
    "Gate",
    "GroverSpec",
    "GroverTrace",
    "QuantumObject",
    "QuantumRegister",
    "Snapshot",
    "SourceSpan",
    "StageOp",
    "QsimError",
    "CapacityError",
    "DimensionError",
    "GateLookupError",
    "MetadataError",
    "NavigationError",
    "ParseError",
    "RangeError",
    "SeparabilityError",
    "StateError",
    "UnsupportedConstructError",
    "basis",
    "col",
    "controlled",
    "dagger",
    "diffusion_operator",
    "expand_operator",
    "grover_circuit",
    "grover_trace",
    "hadamard_operational",
    "identity",
    "inner",
    "is_unitary",
    "kron",
    "linear_combine",
    "marginal_probabilities",
    "mat_mul",
    "optimal_iterations",
    "oracle_operator",
    "parse",
    "probabilities",
    "qo",
    "qreg",
    "qstate",
    "render_snapshot",
    "render_state_lines",
    "row",
    "run_all",
    "sample_measurement",
    "serialize",
    "standard_gate",
    "tensor",
    "tensor_objects",
    "transpose",
]
