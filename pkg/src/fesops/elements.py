"""Validity, optimal rescaling, and two-outcome completion of 2x2 operation elements.

A 2x2 complex matrix M can serve as one element of a single-qubit quantum
operation iff both eigenvalues of M^dag M are at most one. With
S = ||M||_F^2 and D = |det M|^2 those eigenvalues are
(S +- sqrt(S^2 - 4D)) / 2, so the condition reads S <= 1 + D <= 2.
Everything in this module is closed-form arithmetic on S and D.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import InvalidElementError, NonFiniteEntryError, ZeroMatrixError

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class ElementReport:
    """Scalar summary of one operation element."""

    frobenius_sq: float
    abs_det_sq: float
    lambda_min: float
    lambda_max: float
    valid: bool
    saturated: bool
    max_scale_sq: float


class PovmPair(NamedTuple):
    """Two elements satisfying m1^dag m1 + m2^dag m2 = I."""

    m1: np.ndarray
    m2: np.ndarray


def _as_element(m) -> np.ndarray:
    arr = np.array(m, dtype=complex)
    if arr.shape != (2, 2):
        raise ValueError(f"operation elements are 2x2, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntryError("operation element has NaN or infinite entries")
    return arr


def _invariants(arr: np.ndarray) -> tuple[float, float, float, float]:
    """(S, |det|^2, lambda_min, lambda_max) of M^dag M."""
    s = float(np.sum(np.abs(arr) ** 2))
    det_sq = float(abs(arr[0, 0] * arr[1, 1] - arr[0, 1] * arr[1, 0]) ** 2)
    # rounding can push the discriminant a hair below zero at lambda degeneracy
    disc = max(s * s - 4.0 * det_sq, 0.0)
    root = float(np.sqrt(disc))
    return s, det_sq, (s - root) / 2.0, (s + root) / 2.0


def analyze_element(m, tol: float = DEFAULT_TOL) -> ElementReport:
    """Classify a candidate element: validity, saturation, and headroom."""
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    arr = _as_element(m)
    s, det_sq, lam_min, lam_max = _invariants(arr)
    valid = s <= 1.0 + det_sq + tol and det_sq <= 1.0 + tol
    saturated = abs(s - 1.0 - det_sq) <= tol
    scale = 1.0 / lam_max if lam_max > 0.0 else float("inf")
    return ElementReport(s, det_sq, lam_min, lam_max, valid, saturated, scale)


def max_scale_sq(m) -> float:
    """Largest |c|^2 such that c*M is still a valid operation element.

    The direct expression (S - sqrt(S^2 - 4D)) / (2D) is 0/0 at D = 0 and
    cancels catastrophically nearby; 1/lambda_max is the same quantity on
    both branches and is evaluated without subtraction.
    """
    arr = _as_element(m)
    s, _, _, lam_max = _invariants(arr)
    if s == 0.0:
        raise ZeroMatrixError("the zero matrix cannot be rescaled")
    return 1.0 / lam_max


def rescale_optimal(m) -> np.ndarray:
    """Multiply the element by the positive real c of maximal modulus.

    The result saturates the validity bound: its Frobenius norm squared
    equals 1 + |det|^2. Any phase of c would do; positive real is chosen.
    """
    arr = _as_element(m)
    return arr * np.sqrt(max_scale_sq(arr))


def is_osbp_element(m, tol: float = DEFAULT_TOL) -> bool:
    """Whether det(I - M^dag M) vanishes, i.e. one POVM branch is trivial.

    det(I - M^dag M) = (1 - lambda_min)(1 - lambda_max) = 1 - S + |det|^2,
    so this coincides with the saturation flag of :func:`analyze_element`.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    arr = _as_element(m)
    s, det_sq, _, _ = _invariants(arr)
    return abs(1.0 - s + det_sq) <= tol


def complete_to_povm(m1, tol: float = DEFAULT_TOL) -> PovmPair:
    """Complete a valid element to a two-outcome POVM.

    Returns (m1, m2) with m2 the principal Hermitian PSD square root of
    I - m1^dag m1, computed by 2x2 Hermitian eigendecomposition.
    """
    arr = _as_element(m1)
    rest = np.eye(2, dtype=complex) - arr.conj().T @ arr
    rest = (rest + rest.conj().T) / 2.0
    evals, evecs = np.linalg.eigh(rest)
    if evals[0] < -tol:
        raise InvalidElementError(
            f"I - M^dag M has negative eigenvalue {evals[0]:.3e}; element is invalid"
        )
    m2 = (evecs * np.sqrt(np.clip(evals, 0.0, None))) @ evecs.conj().T
    return PovmPair(arr, m2)
