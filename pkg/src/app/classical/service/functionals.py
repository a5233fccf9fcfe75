"""
Lattice functionals of (phi, pi) and their Poisson bracket
{F1, F2} = a sum_s (dF1/dphi dF2/dpi - dF1/dpi dF2/dphi).
"""
from typing import Tuple

import numpy as np

from src.app.classical.domain.functional import LatticeFunctional
from src.app.classical.domain.lattice import LagrangianSpec, LatticeField
from src.app.classical.service.klein_gordon import lattice_energy, lattice_force
from src.app.utils.errors import LatticeMismatchError


def _unit(field: LatticeField, site: int) -> np.ndarray:
    if not 0 <= site < field.sites:
        raise LatticeMismatchError(f"site {site} outside a lattice of {field.sites} sites")
    unit = np.zeros(field.sites)
    unit[site] = 1.0 / field.spacing
    return unit


def point_field(field: LatticeField, site: int) -> LatticeFunctional:
    """F = phi(s)."""
    unit = _unit(field, site)
    return LatticeFunctional(field.phi[site], unit, np.zeros(field.sites), field.spacing)


def point_momentum(field: LatticeField, site: int) -> LatticeFunctional:
    """F = pi(s)."""
    unit = _unit(field, site)
    return LatticeFunctional(field.pi[site], np.zeros(field.sites), unit, field.spacing)


def lattice_energy_functional(field: LatticeField, spec: LagrangianSpec) -> LatticeFunctional:
    """Total lattice energy with dE/dphi = -(Laplacian phi - m^2 phi - g phi^3 / 3!) and dE/dpi = pi."""
    return LatticeFunctional(
        lattice_energy(field, spec),
        -lattice_force(field, spec, time=field.time),
        field.pi,
        field.spacing,
    )


def functional_poisson_bracket(first: LatticeFunctional, second: LatticeFunctional) -> float:
    """
    Raises:
        LatticeMismatchError: If the functionals live on different lattices.
    """
    first.require_same_lattice(second)
    return float(first.spacing * np.sum(first.d_phi * second.d_pi - first.d_pi * second.d_phi))


def hamilton_rates(field: LatticeField, spec: LagrangianSpec) -> Tuple[np.ndarray, np.ndarray]:
    """
    (phi', pi') at every site from {phi(s), E} and {pi(s), E}.
    """
    energy = lattice_energy_functional(field, spec)
    phi_rate = np.array([functional_poisson_bracket(point_field(field, s), energy) for s in range(field.sites)])
    pi_rate = np.array([functional_poisson_bracket(point_momentum(field, s), energy) for s in range(field.sites)])
    return phi_rate, pi_rate
