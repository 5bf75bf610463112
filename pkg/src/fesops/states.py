"""Construction and conversion of flip and exchange symmetric (FES) qubit states.

Conventions, fixed so that file output is bit-exact:

* Computational index: qubit 0 is the most significant bit, bit value 0 is |0>.
* Plus/minus basis: |+> = (|0>+|1>)/sqrt(2), |-> = (|0>-|1>)/sqrt(2).
* Eigenbasis: for even q, psi(p, q) with p = n - q is the equal-weight
  superposition of all placements of q minus factors among n tensor slots,
  with positive real amplitude 1/sqrt(C(n, q)) on each placement.
* A :class:`FesVector` stores the coefficient of psi(n - 2k, 2k) at index k,
  for k = 0 .. floor(n/2).

On any computational index of Hamming weight w the eigenstate psi(p, q) takes
the value 2^(-n/2) * K_q(w) / sqrt(C(n, q)), where K_q is the binary
Krawtchouk polynomial K_q(w) = sum_j (-1)^j C(w, j) C(n-w, q-j). All
expansions and projections below go through that weight-class table, so
amplitudes of equal Hamming weight are equal by construction.
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .exceptions import (
    AllZeroError,
    DimensionMismatchError,
    NotFesStateError,
    NTooLargeError,
    OddQError,
    QOutOfRangeError,
)

N_CAP_DEFAULT = 20
HALF_PI = math.pi / 2


class FamilyDomainWarning(UserWarning):
    """A family angle fell on or outside its usual domain; the limit state is returned."""


def fes_dim(n: int) -> int:
    """Dimension of the FES subspace for n qubits."""
    return n // 2 + 1


def q_values(n: int) -> np.ndarray:
    """Even minus-factor counts, in amplitude order: 0, 2, ..., 2*floor(n/2)."""
    return np.arange(0, n + 1, 2)


@dataclass(frozen=True, eq=False)
class FesVector:
    """Amplitudes of an n-qubit FES state over the even-q eigenbasis."""

    n: int
    amps: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"FES states need at least 2 qubits, got n={self.n}")
        amps = np.array(self.amps, dtype=complex)
        if amps.shape != (fes_dim(self.n),):
            raise DimensionMismatchError(
                f"expected {fes_dim(self.n)} amplitudes for n={self.n}, got shape {amps.shape}"
            )
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)
        if self.normalized and abs(self.norm() - 1.0) > 1e-8:
            raise ValueError(f"flagged normalized but norm is {self.norm()!r}")

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))


@dataclass(frozen=True, eq=False)
class StateVector:
    """Dense 2^n amplitude vector in the computational basis."""

    n: int
    amps: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least 1 qubit, got n={self.n}")
        amps = np.array(self.amps, dtype=complex)
        if amps.shape != (2**self.n,):
            raise DimensionMismatchError(
                f"expected {2**self.n} amplitudes for n={self.n}, got shape {amps.shape}"
            )
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)
        if self.normalized and abs(self.norm() - 1.0) > 1e-8:
            raise ValueError(f"flagged normalized but norm is {self.norm()!r}")

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))


@lru_cache(maxsize=None)
def _hamming_weights(n: int) -> np.ndarray:
    """Hamming weight of every computational index for n qubits."""
    idx = np.arange(2**n, dtype=np.uint32)
    w = np.zeros(2**n, dtype=np.int64)
    for b in range(n):
        w += (idx >> b) & 1
    w.setflags(write=False)
    return w


@lru_cache(maxsize=None)
def _weight_class_coeffs(n: int) -> np.ndarray:
    """Table A[k, w]: value of eigenstate k on any index of Hamming weight w."""
    table = np.zeros((fes_dim(n), n + 1))
    scale = 1.0 / math.sqrt(2**n)
    for k, q in enumerate(range(0, n + 1, 2)):
        unit = scale / math.sqrt(math.comb(n, q))
        for w in range(n + 1):
            kraw = sum(
                (-1) ** j * math.comb(w, j) * math.comb(n - w, q - j)
                for j in range(q + 1)
            )
            table[k, w] = unit * kraw
    table.setflags(write=False)
    return table


def _check_q(n: int, q: int) -> int:
    if q % 2 != 0:
        raise OddQError(f"q must be even, got q={q}")
    if not 0 <= q <= n:
        raise QOutOfRangeError(f"q must lie in 0..{n}, got q={q}")
    return q // 2


def psi_pq(n: int, q: int) -> FesVector:
    """Eigenbasis state with q minus factors (and p = n - q plus factors)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    k = _check_q(n, q)
    amps = np.zeros(fes_dim(n), dtype=complex)
    amps[k] = 1.0
    return FesVector(n, amps)


def to_computational(s: FesVector, cap: int = N_CAP_DEFAULT) -> StateVector:
    """Expand an FES amplitude vector into the full 2^n computational basis."""
    if s.n > cap:
        raise NTooLargeError(f"n={s.n} exceeds the expansion cap {cap}")
    per_weight = s.amps @ _weight_class_coeffs(s.n)
    return StateVector(s.n, per_weight[_hamming_weights(s.n)], normalized=s.normalized)


def from_computational(v: StateVector, tol: float = 1e-10) -> FesVector:
    """Project a computational-basis vector onto the FES subspace.

    Raises :class:`NotFesStateError` when the norm of the part outside the
    subspace exceeds ``tol``.
    """
    if not v.normalized:
        raise ValueError("from_computational expects a normalized StateVector")
    n = v.n
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    weights = _hamming_weights(n)
    sums = np.bincount(weights, weights=v.amps.real, minlength=n + 1) + 1j * np.bincount(
        weights, weights=v.amps.imag, minlength=n + 1
    )
    table = _weight_class_coeffs(n)
    coeffs = table @ sums
    residual = float(np.linalg.norm(v.amps - (coeffs @ table)[weights]))
    if residual > tol:
        raise NotFesStateError(
            f"residual norm {residual:.3e} outside the FES subspace exceeds tol={tol:.3e}"
        )
    return FesVector(n, coeffs, normalized=v.normalized)


def _warn_if_outside(theta: float, family: str, closed_upper: bool) -> None:
    hi_ok = theta <= HALF_PI if closed_upper else theta < HALF_PI
    if not (0.0 < theta and hi_ok):
        warnings.warn(
            f"{family} angle {theta:g} lies on or outside the usual domain; "
            "returning the limiting state",
            FamilyDomainWarning,
            stacklevel=3,
        )


def gamma(theta: float) -> FesVector:
    """Three-qubit family cos(theta)*psi(1,2) + sin(theta)*psi(3,0)."""
    _warn_if_outside(theta, "gamma", closed_upper=False)
    return FesVector(3, np.array([math.sin(theta), math.cos(theta)], dtype=complex))


def theta_family(theta: float) -> FesVector:
    """Four-qubit family (sin/sqrt2)*(psi(4,0) + psi(0,4)) + cos*psi(2,2)."""
    _warn_if_outside(theta, "theta_family", closed_upper=True)
    edge = math.sin(theta) / math.sqrt(2)
    return FesVector(4, np.array([edge, math.cos(theta), edge], dtype=complex))


def phi_family(theta: float) -> FesVector:
    """Five-qubit family (sin/sqrt2)*(psi(5,0) + psi(1,4)) + cos*psi(3,2)."""
    _warn_if_outside(theta, "phi_family", closed_upper=True)
    edge = math.sin(theta) / math.sqrt(2)
    return FesVector(5, np.array([edge, math.cos(theta), edge], dtype=complex))


def ghz(n: int, cap: int = N_CAP_DEFAULT) -> FesVector:
    """The n-qubit GHZ state (|0..0> + |1..1>)/sqrt(2) in the FES eigenbasis.

    Uses the closed form c_q = sqrt(C(n, q) / 2^(n-1)), which is what the
    subspace projection of the computational vector produces; the closed form
    keeps c exactly representable where possible (n=3 gives exactly 1/2).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if n > cap:
        raise NTooLargeError(f"n={n} exceeds the expansion cap {cap}")
    amps = np.array(
        [math.sqrt(math.comb(n, q) / 2 ** (n - 1)) for q in range(0, n + 1, 2)],
        dtype=complex,
    )
    return FesVector(n, amps)


_G_SLOTS = (
    # (index pair, sign pattern): amplitude (x + sign*y)/2 on both indices
    ((0b0000, 0b1111), "ad", +1),
    ((0b0011, 0b1100), "ad", -1),
    ((0b0101, 0b1010), "bc", +1),
    ((0b0110, 0b1001), "bc", -1),
)


def g_abcd(a: complex, b: complex, c: complex, d: complex) -> StateVector:
    """Four-parameter four-qubit family, returned unnormalized.

    Places (a+d)/2 on |0000>,|1111>; (a-d)/2 on |0011>,|1100>;
    (b+c)/2 on |0101>,|1010>; (b-c)/2 on |0110>,|1001>.
    The flip and exchange symmetric slice is b = a - d with c = 0.
    """
    if a == 0 and b == 0 and c == 0 and d == 0:
        raise AllZeroError("all four parameters are zero")
    amps = np.zeros(16, dtype=complex)
    pairs = {"ad": (a, d), "bc": (b, c)}
    for (i, j), key, sign in _G_SLOTS:
        x, y = pairs[key]
        amps[i] = amps[j] = (x + sign * y) / 2
    return StateVector(4, amps, normalized=False)


class SymmetryReport(NamedTuple):
    exchange_symmetric: bool
    flip_symmetric: bool


def check_symmetries(v: StateVector, tol: float = 1e-10) -> SymmetryReport:
    """Test qubit-permutation invariance and 0<->1 relabeling invariance.

    Exchange symmetry holds iff amplitudes agree across every Hamming weight
    class; flip symmetry holds iff the amplitude at each index equals the one
    at its bitwise complement.
    """
    weights = _hamming_weights(v.n)
    exchange = True
    for w in range(v.n + 1):
        group = v.amps[weights == w]
        if group.size and np.max(np.abs(group - group[0])) > tol:
            exchange = False
            break
    flip = bool(np.max(np.abs(v.amps - v.amps[::-1])) <= tol)
    return SymmetryReport(exchange, flip)


def fidelity(x: FesVector | StateVector, y: FesVector | StateVector) -> float:
    """Squared overlap |<x|y>|^2 of two states in the same representation."""
    if type(x) is not type(y):
        raise DimensionMismatchError(
            f"cannot mix representations {type(x).__name__} and {type(y).__name__}"
        )
    if x.n != y.n:
        raise DimensionMismatchError(f"qubit counts differ: {x.n} vs {y.n}")
    return float(abs(np.vdot(x.amps, y.amps)) ** 2)


def normalize(state: FesVector | StateVector):
    """Return the unit-norm version of a state (same representation)."""
    norm = state.norm()
    if norm == 0.0:
        raise AllZeroError("cannot normalize the zero vector")
    return type(state)(state.n, state.amps / norm, normalized=True)


# --- text import/export -----------------------------------------------------
#
# One header line ``n=<int> basis=<fes|comp>`` followed by one ``re,im`` pair
# per amplitude, 17 significant digits (lossless for doubles).

_HEADER_RE = re.compile(r"^n=(\d+) basis=(fes|comp)$")


def dumps_state(state: FesVector | StateVector) -> str:
    basis = "fes" if isinstance(state, FesVector) else "comp"
    lines = [f"n={state.n} basis={basis}"]
    lines += [f"{z.real:.17g},{z.imag:.17g}" for z in state.amps]
    return "\n".join(lines) + "\n"


def loads_state(text: str) -> FesVector | StateVector:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty state file")
    match = _HEADER_RE.match(lines[0].strip())
    if match is None:
        raise ValueError(f"bad state header: {lines[0]!r}")
    n, basis = int(match.group(1)), match.group(2)
    amps = []
    for line in lines[1:]:
        re_part, im_part = line.split(",")
        amps.append(complex(float(re_part), float(im_part)))
    amps = np.asarray(amps, dtype=complex)
    kind = FesVector if basis == "fes" else StateVector
    expected = fes_dim(n) if basis == "fes" else 2**n
    if amps.shape != (expected,):
        raise ValueError(f"expected {expected} amplitudes, got {amps.size}")
    flag = bool(abs(np.linalg.norm(amps) - 1.0) <= 1e-9)
    return kind(n, amps, normalized=flag)


def save_state(state: FesVector | StateVector, path) -> None:
    Path(path).write_text(dumps_state(state), encoding="ascii", newline="\n")


def load_state(path) -> FesVector | StateVector:
    return loads_state(Path(path).read_text(encoding="ascii"))
