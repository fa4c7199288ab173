import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20270809)


def random_complex(rng, rows, cols):
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_unitary(rng, n):
    q, r = np.linalg.qr(random_complex(rng, n, n))
    # normalize the QR phase ambiguity so q is exactly unitary-distributed
    return q * (np.diag(r) / np.abs(np.diag(r)))
