"""
States, bras, and tensor products
=================================

Build quantum states as complex column vectors, combine them with the
Kronecker product, and inspect the Hilbert-space bookkeeping.
"""

import numpy as np

from qsim import basis, col, dagger, inner, kron, qo, qstate, tensor

# A state is a unit column vector. qo() wraps it with dims metadata and
# prints the dims header followed by one amplitude per line.
psi = qo([0.8, 0, 0, 0.6])
print(psi)
print()

# Unit kets: basis(N, indx) puts a single one at the 1-based index.
print(basis(4, 2))
print()

# Or spell the computational basis state directly: d = down = |0>, u = up = |1>.
# The string "ddu" is the three-qubit state |001>.
print(qstate("ddu"))
print()

# Two subsystems combine by tensor product. The dims header keeps the
# subsystem sizes: a qubit times a 4-level system is [ 2 4 ] by [ 1 1 ].
psi1 = qo([0.6, 0.8])
psi2 = qo([0.8, 0.4, 0.2, 0.4])
print(tensor(psi1, psi2))
print()

# The same product at the raw matrix level: kron([a;b], [c;d]) = [ac;ad;bc;bd].
print(kron(col(1, 0), col(0, 1)).ravel())  # |01>

# Bras are conjugate transposes; <psi|psi> = 1 for a unit state.
print("norm^2 of psi:", inner(psi.data, psi.data))
print("bra of [i; 1]:", dagger(col(1j, 1)))

# Probabilities are squared moduli, here 0.64 / 0 / 0 / 0.36.
print("probabilities:", np.abs(psi.data.ravel()) ** 2)
