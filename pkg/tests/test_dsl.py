"""Circuit text format: grammar, spans, broadcast semantics, round-trips."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsim.circuit import Circuit, StageOp
from qsim.dsl import cphase_gate, parse, serialize
from qsim.errors import ParseError, UnsupportedConstructError
from qsim.gates import standard_gate
from qsim.grover import GroverSpec, grover_circuit

H = standard_gate("HADAMARD")


def test_parse_single_wire_gates():
    c = parse("qreg q[2]; H(q[0]); H(q[1]);")
    assert c.qubit_count == 2
    assert [(s.gate.name, s.wires, s.broadcast) for s in c.stages] == [
        ("HADAMARD", (0,), False),
        ("HADAMARD", (1,), False),
    ]


def test_parse_whole_register_broadcast():
    c = parse("qreg q[2]; H(q);")
    assert len(c.stages) == 1
    stage = c.stages[0]
    assert stage.broadcast and stage.wires == (0, 1)
    assert stage.gate.name == "HADAMARD"


def test_parse_arity_mismatch_span():
    with pytest.raises(ParseError) as err:
        parse("qreg q[2]; CNOT(q[0]);")
    assert err.value.span.line == 1
    assert err.value.span.col == 12
    assert "2 targets" in err.value.message


def test_parse_comments_and_crlf():
    c = parse("// prepare\r\nqreg q[2];\r\nH(q[0]); // superpose\r\nCNOT(q[0], q[1]);\r\n")
    assert [s.gate.name for s in c.stages] == ["HADAMARD", "CNOT"]


def test_parse_gate_names_case_insensitive():
    c = parse("qreg q[1]; h(q[0]); x(q[0]); not(q[0]); z(q[0]); snot(q[0]);")
    assert [s.gate.name for s in c.stages] == ["HADAMARD", "NOT", "NOT", "PHASEFLIP", "SNOT"]


def test_parse_cphase_matrix():
    c = parse("qreg q[2]; CPHASE(q[0], q[1]);")
    np.testing.assert_array_equal(c.stages[0].gate.matrix, np.diag([1, 1, 1, -1]))
    assert cphase_gate().arity == 2


def test_parse_three_qubit_gates():
    c = parse("qreg q[3]; TOFFOLI(q[0], q[1], q[2]); FREDKIN(q[2], q[1], q[0]);")
    assert [s.wires for s in c.stages] == [(0, 1, 2), (2, 1, 0)]


def test_parse_measure_flag():
    c = parse("qreg q[1]; H(q[0]); measure;")
    assert c.measure
    assert not parse("qreg q[1]; H(q[0]);").measure


def test_error_unknown_gate():
    with pytest.raises(ParseError, match="unknown gate"):
        parse("qreg q[1]; FROB(q[0]);")


def test_error_undeclared_register():
    with pytest.raises(ParseError, match="undeclared register"):
        parse("qreg q[1]; H(r[0]);")
    with pytest.raises(ParseError, match="undeclared register"):
        parse("H(q[0]); qreg q[1];")


def test_error_index_out_of_range():
    with pytest.raises(ParseError) as err:
        parse("qreg q[2]; H(q[2]);")
    assert "out of range" in err.value.message
    assert err.value.span.col == 16  # the offending index token


def test_error_duplicate_qreg():
    with pytest.raises(ParseError, match="duplicate qreg"):
        parse("qreg q[1]; qreg r[1];")


def test_error_statement_after_measure():
    with pytest.raises(ParseError, match="after measure"):
        parse("qreg q[1]; measure; H(q[0]);")
    with pytest.raises(ParseError, match="after measure"):
        parse("qreg q[1]; measure; measure;")


def test_error_duplicate_wire():
    with pytest.raises(ParseError, match="duplicate wire"):
        parse("qreg q[2]; SWAP(q[0], q[0]);")
    with pytest.raises(ParseError, match="duplicate wire"):
        parse("qreg q[2]; H(q, q[0]);")


def test_error_whole_register_multiqubit():
    with pytest.raises(ParseError, match="single-wire"):
        parse("qreg q[2]; CNOT(q, q);")


def test_error_no_register():
    with pytest.raises(ParseError, match="no quantum register"):
        parse("")
    with pytest.raises(ParseError, match="no quantum register"):
        parse("// only a comment\n")


def test_error_bad_sizes_and_reserved_names():
    with pytest.raises(ParseError, match="size"):
        parse("qreg q[0];")
    with pytest.raises(ParseError, match="reserved"):
        parse("qreg measure[2];")


def test_error_spans_on_later_lines():
    with pytest.raises(ParseError) as err:
        parse("qreg q[2];\nH(q[0]);\nCNOT(q[0]);\n")
    assert err.value.span.line == 3
    assert err.value.span.col == 1


def test_error_unexpected_character():
    with pytest.raises(ParseError, match="unexpected character"):
        parse("qreg q[2]; H(q[0]); $")


def test_serialize_round_trip_canonical_text():
    text = "qreg q[2]; H(q[0]); CNOT(q[0], q[1]);"
    assert serialize(parse(text)) == text


def test_serialize_broadcast_form():
    assert serialize(parse("qreg q[2]; H(q);")) == "qreg q[2]; H(q);"
    # an explicit list covering every wire canonicalizes to the register form
    assert serialize(parse("qreg q[2]; H(q[0], q[1]);")) == "qreg q[2]; H(q);"


def test_serialize_preserves_register_name_and_measure():
    text = "qreg data[3]; X(data[1]); measure;"
    assert serialize(parse(text)) == text


def test_serialize_grover_circuit_unsupported():
    with pytest.raises(UnsupportedConstructError, match="oracle"):
        serialize(grover_circuit(GroverSpec(2, 2, 2)))


def test_parse_serialize_structural_identity():
    programs = [
        "qreg q[1]; H(q[0]);",
        "qreg q[2]; H(q); CNOT(q[0], q[1]); measure;",
        "qreg reg[3]; SNOT(reg[2]); SWAP(reg[2], reg[0]); Z(reg[1]);",
        "qreg q[4]; H(q[1], q[3]); TOFFOLI(q[3], q[2], q[0]); CPHASE(q[0], q[1]);",
    ]
    for text in programs:
        c = parse(text)
        assert parse(serialize(c)) == c


def test_structural_identity_on_programmatic_circuit():
    c = Circuit(
        3,
        (
            StageOp.broadcast_on(H, (0, 2)),
            StageOp.single(standard_gate("CNOT"), (2, 0)),
        ),
        name="demo",
        measure=True,
    )
    assert parse(serialize(c)) == c


_FUZZ_ALPHABET = st.sampled_from(
    list("qregmasuH()[];,0123456789 \n\t") + ["qreg ", "H(", "q[0]", "];", "measure;", "//", "⟩"]
)


@settings(max_examples=300, deadline=None)
@given(st.lists(_FUZZ_ALPHABET, max_size=40).map("".join))
def test_fuzz_parser_never_crashes(text):
    try:
        result = parse(text)
        assert isinstance(result, Circuit)
    except ParseError as err:
        assert err.span.line >= 1 and err.span.col >= 1
        assert err.span.line <= text.count("\n") + 1


@settings(max_examples=200, deadline=None)
@given(st.text(max_size=60))
def test_fuzz_arbitrary_unicode(text):
    try:
        parse(text)
    except ParseError:
        pass
