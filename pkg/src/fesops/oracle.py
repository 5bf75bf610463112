"""Brute-force reference paths over the full 2^n computational basis.

Nothing here shares code with the fast closed-form routes: operators are
applied gate by gate to dense statevectors, and spectral quantities come from
an explicit Hermitian eigensolve. Agreement between the two routes is what
the test suite leans on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import NTooLargeError, ZeroMatrixError
from .states import FesVector, StateVector, fes_dim

ORACLE_CAP_DEFAULT = 14


@dataclass(frozen=True)
class RandomSpec:
    """Seeded request for reproducible random FES states (PCG64 stream)."""

    seed: int
    n: int
    count: int = 1

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need n >= 2, got {self.n}")
        if self.count < 1:
            raise ValueError(f"need count >= 1, got {self.count}")


def kron_apply(m, v: StateVector, cap: int = ORACLE_CAP_DEFAULT) -> StateVector:
    """Apply a single-qubit matrix to every qubit of a dense statevector.

    n successive gate applications; no 2^n x 2^n matrix is ever formed.
    """
    if v.n > cap:
        raise NTooLargeError(f"n={v.n} exceeds the oracle cap {cap}")
    gate = np.array(m, dtype=complex)
    if gate.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {gate.shape}")
    state = v.amps.reshape([2] * v.n)
    for axis in range(v.n):
        state = np.moveaxis(np.moveaxis(state, axis, -1) @ gate.T, -1, axis)
    return StateVector(v.n, state.reshape(-1), normalized=False)


def brute_success_probability(v: StateVector, m, cap: int = ORACLE_CAP_DEFAULT) -> float:
    """Squared norm of the image of v under the n-fold single-qubit operator."""
    return float(kron_apply(m, v, cap=cap).norm() ** 2)


def brute_max_scale(m) -> float:
    """1 / (largest eigenvalue of M^dag M), via numpy's Hermitian eigensolver."""
    arr = np.array(m, dtype=complex)
    if arr.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {arr.shape}")
    if not arr.any():
        raise ZeroMatrixError("the zero matrix cannot be rescaled")
    evals = np.linalg.eigvalsh(arr.conj().T @ arr)
    return float(1.0 / evals[-1])


def random_fes_states(spec: RandomSpec) -> list[FesVector]:
    """``spec.count`` unit vectors in the FES subspace, reproducible from the seed.

    Amplitudes are complex standard normals drawn from ``numpy``'s default
    PCG64 generator, then normalized.
    """
    rng = np.random.default_rng(spec.seed)
    dim = fes_dim(spec.n)
    states = []
    for _ in range(spec.count):
        amps = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        states.append(FesVector(spec.n, amps / np.linalg.norm(amps), normalized=True))
    return states
