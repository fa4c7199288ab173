"""Plain-text circuit format (`.qc`): parser and serializer.

The grammar is a flat, QCL-flavoured statement list:

    program   := { statement }
    statement := "qreg" IDENT "[" INT "]" ";"
               | GATE "(" target { "," target } ")" ";"
               | "measure" ";"
    target    := IDENT [ "[" INT "]" ]

Exactly one `qreg` per program; wire indices are 0-based; `//` comments
run to end of line; `measure` (if present) must be the last statement.
A 1-qubit gate applied to the whole register broadcasts over every wire
as a single stage. Canonical text joins statements with single spaces.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .circuit import Circuit, StageOp
from .errors import ParseError, SourceSpan, UnsupportedConstructError
from .gates import Gate, controlled, standard_gate

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_RESERVED = ("qreg", "measure")


def cphase_gate() -> Gate:
    """Controlled phase flip on two wires (the angle is fixed at pi)."""
    return Gate("CPHASE", 2, controlled(standard_gate("PHASEFLIP"), 1).matrix)


_GATES: dict[str, Gate] = {
    "H": standard_gate("HADAMARD"),
    "X": standard_gate("NOT"),
    "NOT": standard_gate("NOT"),
    "Z": standard_gate("PHASEFLIP"),
    "PHASEFLIP": standard_gate("PHASEFLIP"),
    "SNOT": standard_gate("SNOT"),
    "CNOT": standard_gate("CNOT"),
    "SWAP": standard_gate("SWAP"),
    "TOFFOLI": standard_gate("TOFFOLI"),
    "FREDKIN": standard_gate("FREDKIN"),
    "CPHASE": cphase_gate(),
}

#: canonical surface spelling per internal gate name
_SURFACE = {
    "HADAMARD": "H",
    "NOT": "X",
    "PHASEFLIP": "Z",
    "SNOT": "SNOT",
    "CNOT": "CNOT",
    "SWAP": "SWAP",
    "TOFFOLI": "TOFFOLI",
    "FREDKIN": "FREDKIN",
    "CPHASE": "CPHASE",
}


@dataclass(frozen=True)
class _Token:
    kind: str  # IDENT INT ( ) [ ] , ; EOF
    text: str
    span: SourceSpan


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line, col, i = line + 1, 1, i + 1
            continue
        if ch in " \t\r":
            i, col = i + 1, col + 1
            continue
        if text.startswith("//", i):
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch in "()[],;":
            tokens.append(_Token(ch, ch, SourceSpan(line, col, 1)))
            i, col = i + 1, col + 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], SourceSpan(line, col, j - i)))
            col += j - i
            i = j
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            word = m.group(0)
            tokens.append(_Token("IDENT", word, SourceSpan(line, col, len(word))))
            col += len(word)
            i = m.end()
            continue
        raise ParseError(f"unexpected character {ch!r}", SourceSpan(line, col, 1))
    tokens.append(_Token("EOF", "", SourceSpan(line, col, 1)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.reg_name: str | None = None
        self.reg_size = 0
        self.stages: list[StageOp] = []
        self.measured = False

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            found = repr(tok.text) if tok.text else "end of input"
            raise ParseError(f"expected {what}, found {found}", tok.span, expected=[what])
        return self.advance()

    def parse(self) -> Circuit:
        while self.peek().kind != "EOF":
            self.statement()
        if self.reg_name is None:
            raise ParseError(
                "program declares no quantum register", self.peek().span, expected=["qreg"]
            )
        return Circuit(self.reg_size, tuple(self.stages), name=self.reg_name, measure=self.measured)

    def statement(self):
        tok = self.peek()
        if tok.kind != "IDENT":
            raise ParseError(
                f"expected a statement, found {tok.text!r}",
                tok.span,
                expected=["qreg", "measure", "gate name"],
            )
        if self.measured:
            raise ParseError("statements are not allowed after measure", tok.span)
        if tok.text == "qreg":
            self.declaration()
        elif tok.text == "measure":
            self.advance()
            self.expect(";", "';'")
            self.measured = True
        elif tok.text.upper() in _GATES:
            self.gatecall()
        else:
            raise ParseError(
                f"unknown gate or statement {tok.text!r}",
                tok.span,
                expected=["qreg", "measure", *sorted(_GATES)],
            )

    def declaration(self):
        kw = self.advance()
        if self.reg_name is not None:
            raise ParseError("duplicate qreg declaration (one register per program)", kw.span)
        name_tok = self.expect("IDENT", "register name")
        if name_tok.text in _RESERVED:
            raise ParseError(f"{name_tok.text!r} is a reserved word", name_tok.span)
        self.expect("[", "'['")
        size_tok = self.expect("INT", "register size")
        size = int(size_tok.text)
        if size < 1:
            raise ParseError(f"register size must be >= 1, got {size}", size_tok.span)
        self.expect("]", "']'")
        self.expect(";", "';'")
        self.reg_name, self.reg_size = name_tok.text, size

    def target(self) -> tuple[list[int], _Token, bool]:
        """One gate argument: a single wire, or every wire of the register."""
        name_tok = self.expect("IDENT", "register name")
        if self.reg_name is None or name_tok.text != self.reg_name:
            raise ParseError(f"undeclared register {name_tok.text!r}", name_tok.span)
        if self.peek().kind != "[":
            return list(range(self.reg_size)), name_tok, True
        self.advance()
        idx_tok = self.expect("INT", "wire index")
        idx = int(idx_tok.text)
        if idx >= self.reg_size:
            raise ParseError(
                f"wire index {idx} out of range 0..{self.reg_size - 1}", idx_tok.span
            )
        self.expect("]", "']'")
        return [idx], idx_tok, False

    def gatecall(self):
        gate_tok = self.advance()
        gate = _GATES[gate_tok.text.upper()]
        self.expect("(", "'('")
        targets: list[tuple[list[int], _Token, bool]] = []
        while True:
            targets.append(self.target())
            if self.peek().kind != ",":
                break
            self.advance()
        self.expect(")", "')'")
        self.expect(";", "';'")

        any_whole = any(whole for _, _, whole in targets)
        if gate.arity == 1:
            wires: list[int] = []
            for ws, tok, _ in targets:
                for w in ws:
                    if w in wires:
                        raise ParseError(f"duplicate wire {w} in gate arguments", tok.span)
                    wires.append(w)
            whole = len(targets) == 1 and any_whole
            label = _statement_text(gate, tuple(wires), self.reg_name, self.reg_size, whole)
            if len(wires) == 1:
                self.stages.append(StageOp.single(gate, tuple(wires), label))
            else:
                self.stages.append(StageOp.broadcast_on(gate, tuple(wires), label))
            return
        if any_whole:
            raise ParseError(
                f"gate {gate_tok.text} takes {gate.arity} single-wire targets, not a whole register",
                gate_tok.span,
            )
        if len(targets) != gate.arity:
            raise ParseError(
                f"gate {gate_tok.text} needs {gate.arity} targets, got {len(targets)}",
                gate_tok.span,
            )
        wires = []
        for ws, tok, _ in targets:
            if ws[0] in wires:
                raise ParseError(f"duplicate wire {ws[0]} in gate arguments", tok.span)
            wires.append(ws[0])
        label = _statement_text(gate, tuple(wires), self.reg_name, self.reg_size, False)
        self.stages.append(StageOp.single(gate, tuple(wires), label))


def parse(text: str) -> Circuit:
    """Parse circuit source text; raises ParseError with a source span."""
    return _Parser(text).parse()


def _surface_name(gate: Gate) -> str:
    name = _SURFACE.get(gate.name)
    if name is None:
        raise UnsupportedConstructError(f"gate {gate.name!r} has no text form")
    return name


def _statement_text(gate: Gate, wires: tuple[int, ...], reg: str, size: int, whole: bool) -> str:
    if whole and wires == tuple(range(size)):
        return f"{_surface_name(gate)}({reg})"
    args = ", ".join(f"{reg}[{w}]" for w in wires)
    return f"{_surface_name(gate)}({args})"


def serialize(circuit: Circuit) -> str:
    """Canonical text of a circuit; parse(serialize(c)) equals c structurally."""
    reg = circuit.name if _IDENT_RE.fullmatch(circuit.name or "") and circuit.name not in _RESERVED else "q"
    parts = [f"qreg {reg}[{circuit.qubit_count}];"]
    for stage in circuit.stages:
        if stage.parts or stage.gate is None:
            raise UnsupportedConstructError(
                f"stage {stage.label!r} is composite and has no text form"
            )
        whole = stage.broadcast and stage.wires == tuple(range(circuit.qubit_count))
        parts.append(
            _statement_text(stage.gate, stage.wires, reg, circuit.qubit_count, whole) + ";"
        )
    if circuit.measure:
        parts.append("measure;")
    return " ".join(parts)
