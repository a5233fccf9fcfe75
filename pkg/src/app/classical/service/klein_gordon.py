"""
Klein-Gordon field on a periodic 1+1 lattice, kick-drift-kick leapfrog.
"""
from typing import Optional

import numpy as np

from src.app.classical.domain.lattice import LagrangianSpec, LatticeField
from src.app.utils.errors import CFLViolationError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)


def lattice_force(field: LatticeField, spec: LagrangianSpec, phi: Optional[np.ndarray] = None, time: float = 0.0):
    """pi' = Laplacian phi - m^2 phi - g phi^3 / 3!."""
    phi = field.phi if phi is None else phi
    g = spec.coupling_at(time, field.positions)
    return field.laplacian(phi) - spec.mass ** 2 * phi - g * phi ** 3 / 6.0


def lattice_energy(field: LatticeField, spec: LagrangianSpec) -> float:
    """a sum [pi^2 / 2 + (forward difference of phi)^2 / 2 + m^2 phi^2 / 2 + g phi^4 / 4!]."""
    g = spec.coupling_at(field.time, field.positions)
    density = (
        0.5 * field.pi ** 2
        + 0.5 * field.forward_difference() ** 2
        + 0.5 * spec.mass ** 2 * field.phi ** 2
        + g * field.phi ** 4 / 24.0
    )
    return float(field.spacing * np.sum(density))


def lattice_frequency(wavenumber: float, spacing: float, mass: float, dt: Optional[float] = None) -> float:
    """
    omega = sqrt(m^2 + k_hat^2) with k_hat = (2 / a) sin(k a / 2).

    With ``dt`` the frequency seen by the leapfrog map, sin(Omega dt / 2) = omega dt / 2.
    """
    k_hat = 2.0 / spacing * np.sin(0.5 * wavenumber * spacing)
    omega = float(np.sqrt(mass ** 2 + k_hat ** 2))
    if dt is None:
        return omega
    return float(2.0 / dt * np.arcsin(0.5 * omega * dt))


def solve_klein_gordon(initial: LatticeField, spec: LagrangianSpec, duration: float, steps: int) -> LatticeField:
    """
    Evolve (phi, pi) by ``steps`` kick-drift-kick leapfrog steps over ``duration``.

    Raises:
        CFLViolationError: If dt >= a.
    """
    dt = duration / steps
    if dt >= initial.spacing:
        raise CFLViolationError(f"time step {dt:.4g} violates the CFL bound dt < a = {initial.spacing:.4g}")
    phi, pi = initial.phi.copy(), initial.pi.copy()
    t = initial.time
    logger.debug(f"Klein-Gordon run: {initial.sites} sites, {steps} steps of {dt:.3e}")
    force = lattice_force(initial, spec, phi, t)
    for _ in range(steps):
        pi += 0.5 * dt * force
        phi += dt * pi
        t += dt
        force = lattice_force(initial, spec, phi, t)
        pi += 0.5 * dt * force
    return initial.evolved(phi, pi, t)


def energy_drift(initial: LatticeField, spec: LagrangianSpec, duration: float, steps: int, samples: int = 10) -> float:
    """Largest relative deviation of the lattice energy from its initial value at ``samples`` checkpoints."""
    reference = lattice_energy(initial, spec)
    field = initial
    chunk = max(steps // samples, 1)
    drift = 0.0
    done = 0
    while done < steps:
        count = min(chunk, steps - done)
        field = solve_klein_gordon(field, spec, duration * count / steps, count)
        done += count
        drift = max(drift, abs(lattice_energy(field, spec) - reference))
    return drift / abs(reference) if reference else drift
