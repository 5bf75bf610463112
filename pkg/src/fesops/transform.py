"""Optimally scaled FES operators acting on FES amplitude vectors.

The FES single-qubit operators f*[[1, t], [t, 1]] (t != +-1) act diagonally on
the plus/minus product eigenbasis: the eigenstate with p plus and q minus
factors picks up (f*(1+t))^p * (f*(1-t))^q. The largest scale that keeps the
operator a valid operation element is f = 1/(1 + |t|), which makes the top
eigenvalue of M^dag M exactly one.

For even q the eigenvalues of the n-fold product share one overall sign, so a
normalized trajectory state is defined up to a global sign only. Trajectories
here carry the positive representative |1+t|^p * |1-t|^q, which makes the
identity at t=0, the composition law, and the t <-> 1/t double cover hold
exactly, not just up to phase.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import (
    DegenerateOutcomeError,
    DimensionMismatchError,
    PoleError,
    QOutOfRangeError,
    TOutOfRangeError,
)
from .states import FesVector, fidelity, q_values

UNDERFLOW_FLOOR = 1e-300
_BISECT_TOL = 1e-10
_GRID_EDGE = 1e-9


@dataclass(frozen=True)
class FesOperator:
    """Parameter and scale of the single-qubit operator f*[[1, t], [t, 1]]."""

    t: float
    f: float

    def __post_init__(self):
        if self.t in (1.0, -1.0):
            raise PoleError("operator parameter t = +-1 is singular")
        if not self.f > 0.0:
            raise ValueError(f"scale f must be positive, got {self.f}")

    @property
    def canonical(self) -> bool:
        """True when f carries the maximal valid scale 1/(1 + |t|)."""
        return self.f == 1.0 / (1.0 + abs(self.t))

    def matrix(self) -> np.ndarray:
        return self.f * np.array([[1.0, self.t], [self.t, 1.0]], dtype=complex)


@dataclass(frozen=True)
class TransformOutcome:
    final_state: FesVector
    success_prob: float


def optimal_operator(t: float) -> FesOperator:
    """The maximally scaled operator for |t| < 1."""
    if not abs(t) < 1.0:
        raise TOutOfRangeError(f"optimal scaling needs |t| < 1, got t={t}")
    return FesOperator(t=float(t), f=1.0 / (1.0 + abs(t)))


def eigenvalue(op: FesOperator, n: int, q: int) -> float:
    """Eigenvalue of the n-fold operator on the eigenstate with q minus factors."""
    if q % 2 != 0 or not 0 <= q <= n:
        raise QOutOfRangeError(f"q must be even and in 0..{n}, got q={q}")
    p = n - q
    return (op.f * (1.0 + op.t)) ** p * (op.f * (1.0 - op.t)) ** q


def apply(op: FesOperator, s: FesVector) -> TransformOutcome:
    """Apply the n-fold operator: amplitudes scale by their eigenvalues.

    ``success_prob`` is the squared norm of the unnormalized image, which is
    the probability of the branch when the operator is a valid element.
    """
    if op.t == 0.0 and op.f == 1.0:
        return TransformOutcome(s, 1.0)
    qs = q_values(s.n)
    lam = (op.f * (1.0 + op.t)) ** (s.n - qs) * (op.f * (1.0 - op.t)) ** qs
    scaled = lam * s.amps
    prob = float(np.sum(np.abs(scaled) ** 2))
    if prob < UNDERFLOW_FLOOR:
        raise DegenerateOutcomeError(
            "the image underflowed: the state is orthogonal to the surviving eigenspace"
        )
    final = FesVector(s.n, scaled / np.sqrt(prob), normalized=True)
    return TransformOutcome(final, prob)


def success_probability(s: FesVector, t: float) -> float:
    """Success probability of the optimally scaled transformation at parameter t.

    Closed form: with r = (1-|t|)/(1+|t|), each eigenvalue is r^q for t >= 0
    and r^p for t < 0, so the probability is sum_k |c_k|^2 r^(2q) (or r^(2p)).
    Evaluating the ratio directly keeps the surviving eigenvalue at exactly
    one, so the probability never creeps above its analytic value.
    """
    if not abs(t) < 1.0:
        raise TOutOfRangeError(f"optimal scaling needs |t| < 1, got t={t}")
    if t == 0.0:
        return 1.0
    qs = q_values(s.n)
    if t > 0.0:
        lam = ((1.0 - t) / (1.0 + t)) ** qs
    else:
        lam = ((1.0 + t) / (1.0 - t)) ** (s.n - qs)
    return float(np.sum(np.abs(s.amps) ** 2 * lam**2))


def trajectory(s: FesVector, t: float) -> FesVector:
    """Normalized image of s under the operator family at parameter t.

    Valid for any real t except the poles; the scale f drops out under
    normalization. Amplitudes carry the positive weights |1+t|^p * |1-t|^q
    (the eigenvalues' shared sign is an unobservable global phase).
    """
    if t in (1.0, -1.0):
        raise PoleError("trajectory is undefined at t = +-1")
    if t == 0.0:
        return s
    qs = q_values(s.n)
    weights = abs(1.0 + t) ** (s.n - qs) * abs(1.0 - t) ** qs
    scaled = weights * s.amps
    norm = float(np.linalg.norm(scaled))
    if norm**2 < UNDERFLOW_FLOOR:
        raise DegenerateOutcomeError("trajectory amplitudes underflowed")
    return FesVector(s.n, scaled / norm, normalized=True)


def limit_probability(s: FesVector, direction: int) -> float:
    """Limiting success probability as the parameter approaches +1 or -1.

    Toward +1 only the all-plus eigenstate survives, giving |c_{q=0}|^2;
    toward -1 only the all-minus one, giving |c_{q=n}|^2 for even n and 0
    for odd n (no flip symmetric all-minus state exists then).
    """
    if direction not in (1, -1):
        raise ValueError(f"direction must be +1 or -1, got {direction}")
    if direction == 1:
        return float(abs(s.amps[0]) ** 2)
    if s.n % 2 == 0:
        return float(abs(s.amps[-1]) ** 2)
    return 0.0


def compose_t(t1: float, t2: float) -> float:
    """Parameter of the composed operator: M(t1) M(t2) is proportional to M(t3)."""
    if t1 in (1.0, -1.0) or t2 in (1.0, -1.0):
        raise PoleError("composition inputs must avoid t = +-1")
    denom = 1.0 + t1 * t2
    if denom == 0.0:
        raise PoleError(f"composition pole: 1 + t1*t2 = 0 for t1={t1}, t2={t2}")
    return (t1 + t2) / denom


def vicinity_probability(
    s: FesVector,
    target: FesVector,
    epsilon: float = 1e-4,
    grid_size: int = 512,
) -> float:
    """Best success probability whose outcome stays epsilon-close to a target.

    Maximizes ``success_probability(s, t)`` over the sampled parameters whose
    trajectory has fidelity at least 1 - epsilon with ``target``; feasibility
    boundaries between adjacent grid points are sharpened by bisection down
    to 1e-10 in t. Returns 0.0 when no sampled parameter is feasible.
    """
    if s.n != target.n:
        raise DimensionMismatchError(f"qubit counts differ: {s.n} vs {target.n}")
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    if grid_size < 2:
        raise ValueError(f"grid_size must be at least 2, got {grid_size}")

    def feasible(t: float) -> bool:
        return fidelity(trajectory(s, t), target) >= 1.0 - epsilon

    # t = 0 is always appended so an exact self-target is found on any grid
    grid = np.union1d(np.linspace(-1.0 + _GRID_EDGE, 1.0 - _GRID_EDGE, grid_size), [0.0])
    flags = [feasible(t) for t in grid]

    best = 0.0
    found = False
    for t, ok in zip(grid, flags):
        if ok:
            best = max(best, success_probability(s, float(t)))
            found = True
    for i in range(len(grid) - 1):
        if flags[i] == flags[i + 1]:
            continue
        lo, hi = float(grid[i]), float(grid[i + 1])
        lo_ok = flags[i]
        while hi - lo > _BISECT_TOL:
            mid = (lo + hi) / 2.0
            if feasible(mid) == lo_ok:
                lo = mid
            else:
                hi = mid
        edge = lo if lo_ok else hi
        best = max(best, success_probability(s, edge))
        found = True
    return best if found else 0.0
