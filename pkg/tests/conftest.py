"""Shared random-instance helpers for the test suite.

Every test draws from an explicitly seeded generator so failures are
reproducible; the helpers here are deliberately independent of the
library's own samplers.
"""

import numpy as np
import pytest

from entrodet import validate_density


def ginibre_density(rng, d):
    """Hilbert-Schmidt-measure random mixed state, d x d."""
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q = g @ g.conj().T
    return validate_density(q / q.trace().real)


def random_spectrum_values(rng, d):
    """Sorted normalized eigenvalue vector from exponential weights."""
    w = rng.exponential(size=d)
    return np.sort(w / w.sum())[::-1]


def haar_unitary(rng, d):
    """Haar-distributed unitary via QR with phase correction."""
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(g)
    ph = np.diag(r)
    return q * (ph / np.abs(ph))


def random_pure_bipartite(rng, d_a, d_b):
    """Random pure state density matrix on C^dA (x) C^dB."""
    psi = rng.standard_normal(d_a * d_b) + 1j * rng.standard_normal(d_a * d_b)
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)
