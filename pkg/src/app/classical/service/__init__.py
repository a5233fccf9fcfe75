"""
Classical side of the correspondence: Duffing reduction, action functional,
lattice Klein-Gordon field and the covariant Hamiltonian formalism.
"""
from .action import ActionStationarityReport, action_stationarity_study, evaluate_action, smooth_variation
from .classical_limit import ClassicalLimitReport, classical_limit_study
from .covariant import conjugate_momentum, covariant_hamiltonian_densities
from .duffing import (
    classical_scattering_map,
    duhamel_response,
    scattering_map_jacobian,
    solve_duffing,
    symplectic_defect,
    work_energy_residual,
)
from .functionals import (
    functional_poisson_bracket,
    hamilton_rates,
    lattice_energy_functional,
    point_field,
    point_momentum,
)
from .klein_gordon import energy_drift, lattice_energy, lattice_force, lattice_frequency, solve_klein_gordon

__all__ = [
    "solve_duffing",
    "classical_scattering_map",
    "scattering_map_jacobian",
    "symplectic_defect",
    "work_energy_residual",
    "duhamel_response",
    "evaluate_action",
    "smooth_variation",
    "action_stationarity_study",
    "ActionStationarityReport",
    "solve_klein_gordon",
    "lattice_energy",
    "lattice_force",
    "lattice_frequency",
    "energy_drift",
    "conjugate_momentum",
    "covariant_hamiltonian_densities",
    "functional_poisson_bracket",
    "point_field",
    "point_momentum",
    "lattice_energy_functional",
    "hamilton_rates",
    "classical_limit_study",
    "ClassicalLimitReport",
]
