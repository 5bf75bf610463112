"""Shared brute-force builders used across test modules."""

import itertools
from functools import reduce

import numpy as np

PLUS = np.array([1.0, 1.0]) / np.sqrt(2.0)
MINUS = np.array([1.0, -1.0]) / np.sqrt(2.0)


def brute_psi_pq(n: int, q: int) -> np.ndarray:
    """Equal-weight sum over all placements of q minus factors, normalized.

    Independent of the package's weight-class tables: every term is built as
    an explicit Kronecker product (qubit 0 as the most significant factor).
    """
    acc = np.zeros(2**n, dtype=complex)
    for positions in itertools.combinations(range(n), q):
        factors = [MINUS if k in positions else PLUS for k in range(n)]
        acc += reduce(np.kron, factors)
    return acc / np.linalg.norm(acc)


def random_disc_elements(rng: np.random.Generator, count: int, radius: float = 1.5):
    """2x2 matrices with entries drawn uniformly from a complex disc."""
    r = radius * np.sqrt(rng.uniform(size=(count, 2, 2)))
    phase = rng.uniform(0.0, 2.0 * np.pi, size=(count, 2, 2))
    return r * np.exp(1j * phase)
