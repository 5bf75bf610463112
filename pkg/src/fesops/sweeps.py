"""Parameter sweeps behind the figure panels, with CSV and SVG emission.

Tables are plain float matrices with named columns. The columns listed in
``prob_columns`` hold success (or limiting) probabilities and are the ones a
plot draws; remaining columns are the swept variable and diagnostic
fidelities. All evaluation is sequential and pure, so emitted bytes are
identical across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .exceptions import SweepSpecError, UnknownPanelError
from .states import FesVector, gamma, ghz, phi_family, q_values, theta_family
from .transform import limit_probability, success_probability, trajectory

FAMILIES = ("gamma", "theta", "phi", "ghz", "custom-file")
_ANGLE_FAMILIES = {"gamma": gamma, "theta": theta_family, "phi": phi_family}

DEFAULT_T_SAMPLES = 999
DEFAULT_THETA_SAMPLES = 499
PANEL_T_EDGE = 1e-6  # panels stop this short of the poles t = +-1
PANEL_S_EDGE = 1e-3  # curve-parameter inset for the five-qubit robustness panel
PANELS = ("a", "b", "c", "d", "e", "f")


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep: an initial state family and a variable range."""

    family: str
    variable: str
    lo: float
    hi: float
    samples: int
    family_angle: float | None = None
    direction: int | None = None
    n: int = 3
    state: FesVector | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SweepSpecError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.variable not in ("t", "theta"):
            raise SweepSpecError(f"variable must be 't' or 'theta', got {self.variable!r}")
        if not self.lo < self.hi:
            raise SweepSpecError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if self.samples < 2:
            raise SweepSpecError(f"need at least 2 samples, got {self.samples}")
        if self.variable == "t":
            if not (-1.0 < self.lo and self.hi < 1.0):
                raise SweepSpecError("t range must lie inside (-1, 1)")
            if self.family in _ANGLE_FAMILIES and self.family_angle is None:
                raise SweepSpecError(f"family {self.family!r} needs family_angle")
            if self.family == "custom-file" and self.state is None:
                raise SweepSpecError("family 'custom-file' needs a state")
            if self.family == "ghz" and self.n < 2:
                raise SweepSpecError(f"ghz needs n >= 2, got n={self.n}")
        else:
            if not (0.0 < self.lo and self.hi <= math.pi / 2):
                raise SweepSpecError("theta range must lie inside (0, pi/2]")
            if self.family not in _ANGLE_FAMILIES:
                raise SweepSpecError("theta sweeps need an angle family (gamma/theta/phi)")
        if self.direction not in (None, 1, -1):
            raise SweepSpecError(f"direction must be +1 or -1, got {self.direction}")


@dataclass(frozen=True)
class SweepTable:
    """Named columns of swept samples; rows ascend in the swept variable."""

    header: tuple[str, ...]
    rows: np.ndarray
    prob_columns: tuple[int, ...]

    def __post_init__(self):
        rows = np.array(self.rows, dtype=float)
        if rows.ndim != 2 or rows.shape[1] != len(self.header):
            raise ValueError(f"rows shape {rows.shape} does not match header {self.header}")
        if np.any(np.diff(rows[:, 0]) <= 0):
            raise ValueError("rows must ascend strictly in the swept variable")
        probs = rows[:, list(self.prob_columns)]
        if probs.size and (probs.min() < -1e-15 or probs.max() > 1.0 + 1e-12):
            raise ValueError("probability cells must lie in [0, 1]")
        rows.setflags(write=False)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "header", tuple(self.header))
        object.__setattr__(self, "prob_columns", tuple(self.prob_columns))


def initial_state(spec: SweepSpec) -> FesVector:
    """The initial state a t-sweep starts from."""
    if spec.family == "ghz":
        return ghz(spec.n)
    if spec.family == "custom-file":
        return spec.state
    return _ANGLE_FAMILIES[spec.family](spec.family_angle)


def _limit_header(n: int, direction: int) -> str:
    if direction == 1:
        return f"p_limit_psi_{n}_0"
    if n % 2 == 0:
        return f"p_limit_psi_0_{n}"
    return "p_limit_minus"


def run_sweep(spec: SweepSpec) -> SweepTable:
    """Evaluate one sweep.

    For variable 't': success probability of the optimal transformation plus
    the fidelity of the trajectory state to each eigenbasis state.
    For variable 'theta': the limiting probability of the family state at
    each angle, toward the given direction (+1 by default).
    """
    grid = np.linspace(spec.lo, spec.hi, spec.samples)
    if spec.variable == "t":
        state = initial_state(spec)
        qs = q_values(state.n)
        header = ("t", "p_success") + tuple(f"fid_psi_{state.n - q}_{q}" for q in qs)
        rows = np.empty((spec.samples, len(header)))
        for i, t in enumerate(grid):
            rows[i, 0] = t
            rows[i, 1] = success_probability(state, float(t))
            rows[i, 2:] = np.abs(trajectory(state, float(t)).amps) ** 2
        return SweepTable(header, rows, prob_columns=(1,))

    family = _ANGLE_FAMILIES[spec.family]
    direction = 1 if spec.direction is None else spec.direction
    sample_n = family(grid[0]).n
    header = ("theta", _limit_header(sample_n, direction))
    rows = np.empty((spec.samples, 2))
    for i, theta in enumerate(grid):
        rows[i, 0] = theta
        rows[i, 1] = limit_probability(family(float(theta)), direction)
    return SweepTable(header, rows, prob_columns=(1,))


def _theta_grid(samples: int) -> np.ndarray:
    """Uniform interior grid of (0, pi/2): both endpoints excluded."""
    step = (math.pi / 2) / (samples + 1)
    return np.linspace(step, samples * step, samples)


def _t_sweep_spec(samples: int) -> np.ndarray:
    edge = 1.0 - PANEL_T_EDGE
    return np.linspace(-edge, edge, samples)


def _multi_state_t_panel(
    states: list[FesVector], labels: list[str], samples: int
) -> SweepTable:
    grid = _t_sweep_spec(samples)
    rows = np.empty((samples, 1 + len(states)))
    rows[:, 0] = grid
    for j, state in enumerate(states):
        rows[:, 1 + j] = [success_probability(state, float(t)) for t in grid]
    header = ("t",) + tuple(labels)
    return SweepTable(header, rows, prob_columns=tuple(range(1, 1 + len(states))))


def figure_panel(panel: str, samples: int | None = None) -> SweepTable:
    """Preconfigured sweep(s) for one report panel.

    a: three-qubit GHZ success probability over t.
    b: limiting probability toward psi(3,0) along the gamma family, over theta.
    c: success probabilities over t for theta_family at pi/100, pi/6, pi/2.
    d: limiting probabilities toward both four-qubit separable states, over theta.
    e: success probabilities over t for phi_family at pi/100, pi/4, pi/2.
    f: limiting probability toward psi(5,0) from points along the curves
       through phi_family at pi/2, pi/10, pi/100, swept in the curve
       parameter s.
    """
    panel = panel.lower()
    if panel not in PANELS:
        raise UnknownPanelError(f"unknown panel {panel!r}; choose from {PANELS}")

    if panel == "a":
        m = samples or DEFAULT_T_SAMPLES
        edge = 1.0 - PANEL_T_EDGE
        return run_sweep(SweepSpec("ghz", "t", -edge, edge, m, n=3))

    if panel == "b":
        m = samples or DEFAULT_THETA_SAMPLES
        grid = _theta_grid(m)
        return run_sweep(SweepSpec("gamma", "theta", grid[0], grid[-1], m, direction=1))

    if panel == "c":
        m = samples or DEFAULT_T_SAMPLES
        angles = (math.pi / 100, math.pi / 6, math.pi / 2)
        return _multi_state_t_panel(
            [theta_family(a) for a in angles],
            ["p_theta_pi_100", "p_theta_pi_6", "p_theta_pi_2"],
            m,
        )

    if panel == "d":
        m = samples or DEFAULT_THETA_SAMPLES
        grid = _theta_grid(m)
        rows = np.empty((m, 3))
        rows[:, 0] = grid
        for i, theta in enumerate(grid):
            state = theta_family(float(theta))
            rows[i, 1] = limit_probability(state, 1)
            rows[i, 2] = limit_probability(state, -1)
        return SweepTable(
            ("theta", "p_limit_psi_4_0", "p_limit_psi_0_4"), rows, prob_columns=(1, 2)
        )

    if panel == "e":
        m = samples or DEFAULT_T_SAMPLES
        angles = (math.pi / 100, math.pi / 4, math.pi / 2)
        return _multi_state_t_panel(
            [phi_family(a) for a in angles],
            ["p_phi_pi_100", "p_phi_pi_4", "p_phi_pi_2"],
            m,
        )

    # panel f
    m = samples or DEFAULT_THETA_SAMPLES
    edge = 1.0 - PANEL_S_EDGE
    grid = np.linspace(-edge, edge, m)
    angles = (math.pi / 2, math.pi / 10, math.pi / 100)
    starts = [phi_family(a) for a in angles]
    rows = np.empty((m, 1 + len(starts)))
    rows[:, 0] = grid
    for i, s in enumerate(grid):
        for j, start in enumerate(starts):
            rows[i, 1 + j] = limit_probability(trajectory(start, float(s)), 1)
    header = ("s", "p_limit_phi_pi_2", "p_limit_phi_pi_10", "p_limit_phi_pi_100")
    return SweepTable(header, rows, prob_columns=(1, 2, 3))


# --- CSV ---------------------------------------------------------------------


def csv_bytes(table: SweepTable) -> bytes:
    """Deterministic CSV serialization: 12 significant digits, LF newlines."""
    lines = [",".join(table.header)]
    for row in table.rows:
        lines.append(",".join(format(x, ".12g") for x in row))
    return ("\n".join(lines) + "\n").encode("ascii")


def emit_csv(table: SweepTable, path) -> None:
    Path(path).write_bytes(csv_bytes(table))


def read_csv(path) -> SweepTable:
    """Parse a table written by :func:`emit_csv` (probability columns inferred)."""
    lines = Path(path).read_text(encoding="ascii").splitlines()
    header = tuple(lines[0].split(","))
    rows = np.array([[float(x) for x in line.split(",")] for line in lines[1:]])
    prob_columns = tuple(
        i for i, name in enumerate(header) if name.startswith(("p_", "prob"))
    )
    return SweepTable(header, rows, prob_columns)


# --- SVG ---------------------------------------------------------------------

_SVG_W, _SVG_H = 720, 480
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 64, 16, 20, 48
_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
_N_TICKS = 6


def svg_text(table: SweepTable) -> str:
    """Static SVG 1.1 line chart: one polyline per probability column."""
    if table.rows.shape[0] < 2:
        raise ValueError("an SVG plot needs at least 2 rows")
    x = table.rows[:, 0]
    xmin, xmax = float(x[0]), float(x[-1])
    ymin = 0.0
    ymax = max(1.0, float(table.rows[:, list(table.prob_columns)].max()))
    plot_w = _SVG_W - _MARGIN_L - _MARGIN_R
    plot_h = _SVG_H - _MARGIN_T - _MARGIN_B

    def sx(v: float) -> float:
        return _MARGIN_L + (v - xmin) / (xmax - xmin) * plot_w

    def sy(v: float) -> float:
        return _SVG_H - _MARGIN_B - (v - ymin) / (ymax - ymin) * plot_h

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_SVG_W}" height="{_SVG_H}" viewBox="0 0 {_SVG_W} {_SVG_H}">',
        f'<rect width="{_SVG_W}" height="{_SVG_H}" fill="white"/>',
        f'<line x1="{_MARGIN_L}" y1="{sy(ymin):.2f}" x2="{_SVG_W - _MARGIN_R}" '
        f'y2="{sy(ymin):.2f}" stroke="black"/>',
        f'<line x1="{_MARGIN_L}" y1="{sy(ymin):.2f}" x2="{_MARGIN_L}" '
        f'y2="{_MARGIN_T}" stroke="black"/>',
    ]
    for v in np.linspace(xmin, xmax, _N_TICKS):
        px = sx(float(v))
        parts.append(
            f'<line x1="{px:.2f}" y1="{sy(ymin):.2f}" x2="{px:.2f}" '
            f'y2="{sy(ymin) + 5:.2f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{px:.2f}" y="{sy(ymin) + 18:.2f}" font-size="11" '
            f'text-anchor="middle">{v:.3g}</text>'
        )
    for v in np.linspace(ymin, ymax, _N_TICKS):
        py = sy(float(v))
        parts.append(
            f'<line x1="{_MARGIN_L - 5}" y1="{py:.2f}" x2="{_MARGIN_L}" '
            f'y2="{py:.2f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{_MARGIN_L - 8}" y="{py + 4:.2f}" font-size="11" '
            f'text-anchor="end">{v:.3g}</text>'
        )
    parts.append(
        f'<text x="{_MARGIN_L + plot_w / 2:.2f}" y="{_SVG_H - 10}" font-size="13" '
        f'text-anchor="middle">{table.header[0]}</text>'
    )
    parts.append(
        f'<text x="16" y="{_MARGIN_T + plot_h / 2:.2f}" font-size="13" '
        f'text-anchor="middle" transform="rotate(-90 16 {_MARGIN_T + plot_h / 2:.2f})"'
        ">probability</text>"
    )
    for j, col in enumerate(table.prob_columns):
        color = _PALETTE[j % len(_PALETTE)]
        points = " ".join(
            f"{sx(float(px)):.2f},{sy(float(py)):.2f}"
            for px, py in zip(x, table.rows[:, col])
        )
        parts.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>')
        parts.append(
            f'<text x="{_SVG_W - _MARGIN_R - 6}" y="{_MARGIN_T + 14 + 16 * j}" '
            f'font-size="12" text-anchor="end" fill="{color}">{table.header[col]}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_svg(table: SweepTable, path) -> None:
    text = svg_text(table)
    Path(path).write_text(text, encoding="ascii", newline="\n")
