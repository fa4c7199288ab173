"""Quantum objects: complex matrices tagged with Hilbert-space metadata.

A :class:`QuantumObject` wraps a matrix together with the subsystem
dimensions of its ket and bra sides. Kets are columns, bras rows, and
operators square matrices; `tensor_objects` concatenates the dims
bookkeeping while `kron`-ing the data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

import numpy as np

from . import linalg
from .errors import MetadataError, RangeError, StateError
from .linalg import Matrix

Dims = tuple[tuple[int, ...], tuple[int, ...]]


def _fmt_real(v: float) -> str:
    # compact display format: "0.48", "1", "0.7071"
    if v == 0:
        return "0"
    return format(v, ".4g")


def format_amplitude(z: complex) -> str:
    """Short human-readable form of one complex entry."""
    re, im = float(z.real), float(z.imag)
    if im == 0:
        return _fmt_real(re)
    if re == 0:
        return f"{_fmt_real(im)}i"
    sign = "+" if im >= 0 else "-"
    return f"{_fmt_real(re)} {sign} {_fmt_real(abs(im))}i"


@dataclass(frozen=True)
class QuantumObject:
    """A matrix plus ket-side/bra-side subsystem dimensions.

    `size` is always 1: multi-member quantum arrays are out of scope.
    """

    data: Matrix = field(compare=False)
    dims: Dims

    def __post_init__(self):
        data = linalg.as_matrix(self.data)
        object.__setattr__(self, "data", data)
        ket, bra = self.dims
        if prod(ket) != data.shape[0] or prod(bra) != data.shape[1]:
            raise MetadataError(
                f"dims {list(ket)} by {list(bra)} do not match data shape {data.shape}"
            )
        object.__setattr__(self, "dims", (tuple(ket), tuple(bra)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def size(self) -> int:
        return 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuantumObject):
            return NotImplemented
        return self.dims == other.dims and np.array_equal(self.data, other.data)

    def __str__(self) -> str:
        return render_qobj(self)

    def __repr__(self) -> str:
        ket, bra = self.dims
        return f"QuantumObject(shape={self.shape}, dims=({list(ket)}, {list(bra)}))"


def render_qobj(obj: QuantumObject) -> str:
    """Text dump: dims header plus one comma-separated line per matrix row."""
    ket, bra = obj.dims
    header = (
        "Quantum object, Hilbert space dimensions "
        f"[ {' '.join(map(str, ket))} ] by [ {' '.join(map(str, bra))} ]"
    )
    lines = [", ".join(format_amplitude(z) for z in r) for r in obj.data]
    return "\n".join([header, *lines])


def qo(data, dims: Dims | None = None) -> QuantumObject:
    """Wrap a matrix (or column) as a quantum object.

    dims defaults to one ket-side and one bra-side factor matching the shape.
    """
    m = linalg.as_matrix(data)
    if dims is None:
        dims = ((m.shape[0],), (m.shape[1],))
    return QuantumObject(m, dims)


def basis(dimension: int, index: int) -> QuantumObject:
    """Unit ket with a single one at 1-based position `index`."""
    if dimension < 1:
        raise RangeError(f"basis dimension must be >= 1, got {dimension}")
    if not 1 <= index <= dimension:
        raise RangeError(f"basis index {index} out of range 1..{dimension}")
    v = np.zeros((dimension, 1), dtype=np.complex128)
    v[index - 1, 0] = 1.0
    return qo(v)


def qstate(spec: str) -> QuantumObject:
    """Tensor-product basis ket from a d/u string: d -> [1;0], u -> [0;1].

    The leftmost character is the most significant (first) qubit.
    """
    if not spec:
        raise StateError("state spec must be nonempty")
    index = 0
    for pos, ch in enumerate(spec, start=1):
        c = ch.lower()
        if c not in ("d", "u"):
            raise StateError(f"invalid state character {ch!r} at position {pos} (use d or u)")
        index = (index << 1) | (1 if c == "u" else 0)
    v = np.zeros((2 ** len(spec), 1), dtype=np.complex128)
    v[index, 0] = 1.0
    return qo(v)


def tensor_objects(*objs: QuantumObject) -> QuantumObject:
    """Tensor product; dims concatenate on each side, data folds by kron."""
    if len(objs) == 1 and isinstance(objs[0], (list, tuple)):
        objs = tuple(objs[0])
    if not objs:
        raise StateError("tensor_objects needs at least one operand")
    data = objs[0].data
    for o in objs[1:]:
        data = linalg.kron(data, o.data)
    ket = tuple(d for o in objs for d in o.dims[0])
    bra = tuple(d for o in objs for d in o.dims[1])
    return QuantumObject(data, (ket, bra))


#: alias mirroring the QOTM5-style call surface
tensor = tensor_objects
