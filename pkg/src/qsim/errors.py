"""Exception hierarchy shared across the package.

Everything raised on purpose derives from :class:`QsimError`; the mixin
bases (`ValueError`, `IndexError`, ...) keep the exceptions catchable by
their conventional builtin category as well.
"""

from __future__ import annotations

from dataclasses import dataclass


class QsimError(Exception):
    """Base class for all errors raised by qsim."""


class DimensionError(QsimError, ValueError):
    """Operand shapes are incompatible for the requested operation."""


class MetadataError(DimensionError):
    """Hilbert-space metadata (dims) inconsistent with the data shape."""


class StateError(QsimError, ValueError):
    """A state fails a physical requirement, e.g. unit norm or qubit shape."""


class RangeError(QsimError, IndexError):
    """An index (basis component, wire, search target) is out of range."""


class SeparabilityError(QsimError):
    """Per-qubit access on a register that is no longer a known product."""


class GateLookupError(QsimError, LookupError):
    """Unknown gate name."""


class CapacityError(QsimError):
    """Requested object exceeds the configured dense-simulation limits."""


class NavigationError(QsimError):
    """Stepping past either end of an execution session."""


class UnsupportedConstructError(QsimError):
    """A circuit contains a stage the text format cannot express."""


@dataclass(frozen=True)
class SourceSpan:
    """Location of a token or statement in circuit source text (1-based)."""

    line: int
    col: int
    length: int = 1


class ParseError(QsimError):
    """Syntax or semantic error in circuit source text, with its location."""

    def __init__(self, message: str, span: SourceSpan, expected: list[str] | None = None):
        self.message = message
        self.span = span
        self.expected = list(expected or [])
        super().__init__(str(self))

    def __str__(self) -> str:
        text = f"line {self.span.line}, col {self.span.col}: {self.message}"
        if self.expected:
            text += " (expected " + " | ".join(self.expected) + ")"
        return text

    def to_dict(self) -> dict:
        return {
            "message": self.message,
            "span": {"line": self.span.line, "col": self.span.col, "length": self.span.length},
            "expected": self.expected,
        }
