"""Dense complex linear algebra on numpy arrays.

Every matrix in the package is a 2-D ``complex128`` ndarray. Column
vectors are ``(n, 1)`` matrices and row vectors ``(1, n)``; `row` and
`col` build them Matlab-style, so states, bras and operators all share
one carrier type.
"""

from __future__ import annotations

from numbers import Number

import numpy as np

from .errors import DimensionError

Matrix = np.ndarray

#: default tolerance for unitarity / normalization checks
UNITARY_TOL = 1e-10


def as_matrix(values) -> Matrix:
    """Coerce array-like input to a 2-D complex matrix.

    1-D input becomes a column vector, scalars a 1x1 matrix.
    """
    m = np.asarray(values, dtype=np.complex128)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    elif m.ndim == 1:
        m = m.reshape(-1, 1)
    elif m.ndim != 2:
        raise DimensionError(f"expected at most 2 dimensions, got shape {m.shape}")
    if m.size == 0:
        raise DimensionError("matrix must be nonempty")
    return m


def row(*entries) -> Matrix:
    """Build a row vector from scalars, or stack row blocks horizontally."""
    blocks = [as_matrix(e).reshape(1, -1) if isinstance(e, Number) else as_matrix(e) for e in entries]
    if not blocks:
        raise DimensionError("row() needs at least one entry")
    heights = {b.shape[0] for b in blocks}
    if len(heights) != 1:
        raise DimensionError(f"row blocks disagree on height: {sorted(heights)}")
    return np.hstack(blocks)


def col(*entries) -> Matrix:
    """Build a column vector from scalars, or stack row/matrix blocks vertically."""
    blocks = [as_matrix(e).reshape(1, -1) if isinstance(e, Number) else as_matrix(e) for e in entries]
    if not blocks:
        raise DimensionError("col() needs at least one entry")
    widths = {b.shape[1] for b in blocks}
    if len(widths) != 1:
        raise DimensionError(f"col blocks disagree on width: {sorted(widths)}")
    return np.vstack(blocks)


def identity(n: int) -> Matrix:
    if n < 1:
        raise DimensionError(f"identity size must be >= 1, got {n}")
    return np.eye(n, dtype=np.complex128)


def zeros(rows: int, cols: int) -> Matrix:
    if rows < 1 or cols < 1:
        raise DimensionError(f"zero matrix shape must be positive, got ({rows}, {cols})")
    return np.zeros((rows, cols), dtype=np.complex128)


def linear_combine(a: complex, m1: Matrix, b: complex, m2: Matrix) -> Matrix:
    """Elementwise a*m1 + b*m2; shapes must match exactly."""
    m1, m2 = as_matrix(m1), as_matrix(m2)
    if m1.shape != m2.shape:
        raise DimensionError(f"cannot combine shapes {m1.shape} and {m2.shape}")
    return a * m1 + b * m2


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"inner dimensions differ: {a.shape} x {b.shape}")
    return a @ b


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; block (i, j) is a[i, j] * b."""
    return np.kron(as_matrix(a), as_matrix(b))


def dagger(a: Matrix) -> Matrix:
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def transpose(a: Matrix) -> Matrix:
    """Plain transpose (no conjugation)."""
    return as_matrix(a).T


def inner(phi: Matrix, psi: Matrix) -> complex:
    """Scalar <phi|psi> for two column vectors of equal length."""
    phi, psi = as_matrix(phi), as_matrix(psi)
    if phi.shape[1] != 1 or psi.shape[1] != 1:
        raise DimensionError(f"inner() needs column vectors, got {phi.shape} and {psi.shape}")
    if phi.shape[0] != psi.shape[0]:
        raise DimensionError(f"column lengths differ: {phi.shape[0]} vs {psi.shape[0]}")
    return complex(np.vdot(phi, psi))


def is_unitary(a: Matrix, tol: float = UNITARY_TOL) -> bool:
    """True iff a @ dagger(a) deviates from the identity by at most tol per entry."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"unitarity is defined for square matrices, got {a.shape}")
    dev = a @ a.conj().T - np.eye(a.shape[0])
    return float(np.max(np.abs(dev))) <= tol
