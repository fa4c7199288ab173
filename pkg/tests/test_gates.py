"""Gate table contents, the operational Hadamard, and controlled gates."""

import numpy as np
import pytest

from qsim.errors import CapacityError, GateLookupError, StateError
from qsim.gates import (
    MAX_GATE_WIRES,
    STANDARD_GATE_NAMES,
    Gate,
    controlled,
    hadamard_operational,
    standard_gate,
)
from qsim.linalg import is_unitary

INV_SQRT2 = 0.7071067811865475


def test_every_standard_gate_is_unitary():
    for name in STANDARD_GATE_NAMES:
        assert is_unitary(standard_gate(name).matrix, 1e-10), name


def test_identity_matrix():
    np.testing.assert_array_equal(standard_gate("IDENTITY").matrix, np.eye(2))


def test_single_qubit_matrices_exact():
    np.testing.assert_array_equal(standard_gate("NOT").matrix, [[0, 1], [1, 0]])
    np.testing.assert_array_equal(standard_gate("PHASEFLIP").matrix, [[1, 0], [0, -1]])
    np.testing.assert_array_equal(
        standard_gate("HADAMARD").matrix, [[INV_SQRT2, INV_SQRT2], [INV_SQRT2, -INV_SQRT2]]
    )
    np.testing.assert_array_equal(
        standard_gate("SNOT").matrix, [[INV_SQRT2, -INV_SQRT2], [INV_SQRT2, INV_SQRT2]]
    )


def test_cnot_mapping():
    cnot = standard_gate("CNOT").matrix
    # |10> -> |11> and |11> -> |10>; |00>, |01> fixed
    np.testing.assert_array_equal(cnot @ np.eye(4)[:, 2], np.eye(4)[:, 3])
    np.testing.assert_array_equal(cnot @ np.eye(4)[:, 3], np.eye(4)[:, 2])
    np.testing.assert_array_equal(cnot @ np.eye(4)[:, 0], np.eye(4)[:, 0])
    np.testing.assert_array_equal(cnot @ np.eye(4)[:, 1], np.eye(4)[:, 1])


def test_swap_exchanges_middle_states():
    swap = standard_gate("SWAP").matrix
    np.testing.assert_array_equal(swap @ np.eye(4)[:, 1], np.eye(4)[:, 2])
    np.testing.assert_array_equal(swap @ np.eye(4)[:, 2], np.eye(4)[:, 1])


def test_toffoli_and_fredkin_permutations():
    tof = standard_gate("TOFFOLI").matrix
    np.testing.assert_array_equal(tof @ np.eye(8)[:, 6], np.eye(8)[:, 7])
    np.testing.assert_array_equal(tof @ np.eye(8)[:, 7], np.eye(8)[:, 6])
    fred = standard_gate("FREDKIN").matrix
    np.testing.assert_array_equal(fred @ np.eye(8)[:, 5], np.eye(8)[:, 6])
    np.testing.assert_array_equal(fred @ np.eye(8)[:, 6], np.eye(8)[:, 5])


def test_snot_square_frozen():
    s = standard_gate("SNOT").matrix
    np.testing.assert_allclose(s @ s, [[0, -1], [1, 0]], atol=1e-15)


def test_lookup_aliases_and_case():
    assert standard_gate("xor") == standard_gate("CNOT")
    assert standard_gate("hadamard") == standard_gate("HADAMARD")
    assert standard_gate("x") == standard_gate("NOT")


def test_unknown_gate_lists_names():
    with pytest.raises(GateLookupError, match="HADAMARD"):
        standard_gate("BOGUS")


def test_hadamard_operational_equals_table():
    np.testing.assert_allclose(
        hadamard_operational().matrix, standard_gate("HADAMARD").matrix, atol=1e-12, rtol=0
    )


def test_hadamard_operational_values():
    h = hadamard_operational().matrix
    np.testing.assert_array_equal(h @ [[1], [0]], [[INV_SQRT2], [INV_SQRT2]])
    np.testing.assert_allclose(h @ h, np.eye(2), atol=1e-12, rtol=0)


def test_involutions():
    for name, dim in (("HADAMARD", 2), ("NOT", 2), ("PHASEFLIP", 2), ("CNOT", 4), ("TOFFOLI", 8)):
        m = standard_gate(name).matrix
        np.testing.assert_allclose(m @ m, np.eye(dim), atol=1e-12, rtol=0, err_msg=name)


def test_swap_from_three_cnots():
    # reversed-control CNOT written out by hand: exchanges |01> and |11>
    cnot_10 = np.eye(4, dtype=complex)
    cnot_10[[1, 3]] = cnot_10[[3, 1]]
    cnot_01 = standard_gate("CNOT").matrix
    np.testing.assert_allclose(
        standard_gate("SWAP").matrix, cnot_01 @ cnot_10 @ cnot_01, atol=1e-12, rtol=0
    )


def test_controlled_not_is_cnot():
    np.testing.assert_array_equal(
        controlled(standard_gate("NOT"), 1).matrix, standard_gate("CNOT").matrix
    )


def test_doubly_controlled_not_is_toffoli():
    np.testing.assert_array_equal(
        controlled(standard_gate("NOT"), 2).matrix, standard_gate("TOFFOLI").matrix
    )


def test_controlled_phaseflip():
    np.testing.assert_array_equal(
        controlled(standard_gate("PHASEFLIP"), 1).matrix, np.diag([1, 1, 1, -1])
    )


def test_controlled_arity_and_name():
    g = controlled(standard_gate("NOT"), 2)
    assert g.arity == 3
    assert g.name == "CCNOT"


def test_controlled_capacity():
    with pytest.raises(CapacityError):
        controlled(standard_gate("TOFFOLI"), MAX_GATE_WIRES - 2)


def test_controlled_requires_a_control():
    with pytest.raises(StateError):
        controlled(standard_gate("NOT"), 0)


def test_gate_invariants_enforced():
    with pytest.raises(StateError):
        Gate("SHEAR", 1, np.array([[1, 1], [0, 1]]))
    with pytest.raises(StateError):
        Gate("WRONG", 2, np.eye(2))
