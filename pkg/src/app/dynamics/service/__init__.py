"""
Service layer for free flows and the two scattering routes.
"""
from .closed_form import DrivenOscillatorConstants, driven_oscillator_closed_form
from .flow import free_flow, transport_symbol
from .hilbert_route import (
    coherent_fidelity,
    confinement_operator,
    evolve_hilbert,
    free_evolution_hilbert,
    free_propagator,
    hamiltonian_operator,
    interaction_shapes,
    minimum_hilbert_steps,
    phase_space_centroid,
    scattering_operator_hilbert,
)
from .properties import (
    RouteConvergenceReport,
    ScatteringRoute,
    causality_residual,
    route_convergence_study,
    scattering_operator,
    window_shift_consistency,
)
from .star_route import interaction_potential, scattering_operator_star

__all__ = [
    "free_flow",
    "transport_symbol",
    "hamiltonian_operator",
    "evolve_hilbert",
    "free_evolution_hilbert",
    "free_propagator",
    "scattering_operator_hilbert",
    "minimum_hilbert_steps",
    "coherent_fidelity",
    "confinement_operator",
    "interaction_shapes",
    "phase_space_centroid",
    "interaction_potential",
    "scattering_operator_star",
    "ScatteringRoute",
    "scattering_operator",
    "causality_residual",
    "RouteConvergenceReport",
    "route_convergence_study",
    "window_shift_consistency",
    "DrivenOscillatorConstants",
    "driven_oscillator_closed_form",
]
