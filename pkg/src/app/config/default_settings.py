from pathlib import Path

# --- Path Definitions ---
APP_DIR = Path(__file__).resolve().parent.parent  # src/app/
PROJECT_ROOT = APP_DIR.parent.parent  # weyl-moyal-lab/

# --- Tolerance table ---
# Every numerical check reads its threshold from here; callers may pass overrides.
DEFAULT_TOLERANCES = {
    # phase_space
    "real_symbol_imag": 1e-10,
    "unitary_matrix": 1e-12,
    "normalization": 1e-12,
    "round_trip": 1e-10,
    "hermiticity": 1e-10,
    "trace_identity": 1e-8,
    "wigner_integral": 1e-8,
    "boundary_mass": 1e-12,
    "boundary_band_fraction": 0.1,
    "polynomial_fit": 1e-10,
    # moyal
    "band_limit": 1e-10,
    "correspondence": 1e-8,
    "associativity": 1e-9,
    "method_agreement": 1e-6,
    "star_slope": 0.1,
    "bracket_slope": 0.2,
    # dynamics
    "flow_composition": 1e-12,
    "symplectic_det": 1e-12,
    "support_escape": 1e-10,
    "step_resolution": 0.5,
    "unitarity_hilbert": 1e-6,
    "unitarity_star": 1e-5,
    "route_agreement": 1e-5,
    "causality": 1e-5,
    "hilbert_order_slope": 0.2,
    "star_order_slope": 0.5,
    "window_shift": 1e-6,
    "potential_tail": 1e-14,
    "closed_form": 1e-6,
    # green
    "cauchy_relative": 1e-3,
    "green_first_order": 1e-5,
    "green_second_order": 1e-4,
    "epsilon_slope": 0.3,
    "quartic_shift": 5e-3,
    "pulse_tail": 1e-12,
    # perturbation
    "wick_equivalence": 1e-12,
    "pv_relative": 1e-2,
    "pv_zero_energy": 2e-2,
    # classical
    "duffing_step": 0.1,
    "harmonic_return": 1e-8,
    "duhamel": 1e-8,
    "work_energy": 1e-8,
    "map_symplectic": 1e-8,
    "map_jacobian": 1e-6,
    "action_virial": 1e-8,
    "action_slope": 0.2,
    "classical_limit_slope": 0.2,
    "energy_conservation": 1e-10,
    "kg_energy_drift": 1e-6,
    "kg_dispersion": 1e-6,
    "machine": 1e-12,
    "momentum_consistency": 1e-10,
}

# --- Default Application Configuration ---
DEFAULT_CONFIG = {
    "app": {
        "name": "Weyl-Moyal Scattering Lab",
        "version": "0.1.0",
    },
    "tolerances": DEFAULT_TOLERANCES,
    "confinement": {
        # fractions of the energy radius of the box boundary
        "mid_fraction": 0.56,
        "width_fraction": 0.064,
        "compare_fraction": 0.1,
    },
    "band_limit": {
        "strict": False,
    },
    "green": {
        "epsilons": [0.2, 0.1, 0.05],
        "sigmas": [0.4, 0.2, 0.1],
        "route": "star",
    },
    "storage": {
        "csv_max_points": 64,
        "json_indent": 2,
    },
    "classical": {
        # fixed box of the classical-limit study; N grows as hbar shrinks
        "limit_half_extent": 4.0,
    },
    "runtime": {
        "max_workers": 4,
        "output_dir": "reports",
    },
}
