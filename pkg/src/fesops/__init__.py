"""Optimal one-shot local transformations of flip and exchange symmetric states."""

from . import elements, exceptions, oracle, states, sweeps, transform
from .elements import (
    ElementReport,
    PovmPair,
    analyze_element,
    complete_to_povm,
    is_osbp_element,
    max_scale_sq,
    rescale_optimal,
)
from .oracle import RandomSpec, brute_max_scale, brute_success_probability, kron_apply, random_fes_states
from .states import (
    FesVector,
    StateVector,
    check_symmetries,
    fidelity,
    from_computational,
    g_abcd,
    gamma,
    ghz,
    load_state,
    normalize,
    phi_family,
    psi_pq,
    save_state,
    theta_family,
    to_computational,
)
from .sweeps import SweepSpec, SweepTable, emit_csv, emit_svg, figure_panel, run_sweep
from .transform import (
    FesOperator,
    TransformOutcome,
    compose_t,
    eigenvalue,
    limit_probability,
    optimal_operator,
    success_probability,
    trajectory,
    vicinity_probability,
)

__version__ = "0.1.0"
