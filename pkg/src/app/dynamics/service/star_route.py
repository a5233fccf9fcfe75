"""
Phase-space route: the interaction-picture equation i hbar dS/dt = V_I(t) * S
integrated with classical fourth-order Runge-Kutta on grid symbols.
"""
import time
from typing import Callable, Mapping, Optional

import numpy as np

from src.app.config.core import resolve_tolerances
from src.app.dynamics.domain.hamiltonian import QuadraticHamiltonian
from src.app.dynamics.domain.potential import PotentialSpec
from src.app.dynamics.service.flow import free_flow
from src.app.moyal.domain.star_method import SPECTRAL, BandLimitPolicy
from src.app.moyal.service.star import check_band_limit, star
from src.app.phase_space.domain.grid import PhaseSpaceGrid
from src.app.phase_space.domain.symbol import Symbol
from src.app.phase_space.service.weyl import constant_symbol, symbol_from_function
from src.app.utils.errors import StepResolutionError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)


def interaction_potential(
    hamiltonian: QuadraticHamiltonian,
    potential: PotentialSpec,
    grid: PhaseSpaceGrid,
    t: float,
    cutoff: Optional[Callable] = None,
) -> Symbol:
    """
    V_I(t) = V(t) o free_flow(t - T1), confined by chi(H0).

    Args:
        hamiltonian (QuadraticHamiltonian): H0 generating the free flow
        potential (PotentialSpec): V and its reference time T1
        grid (PhaseSpaceGrid): sampling grid
        t (float): time inside the window
        cutoff (Optional[Callable]): precomputed chi, rebuilt when omitted

    Returns:
        Symbol: real interaction-picture potential with its generator
    """
    chi = cutoff or potential.confinement.cutoff(hamiltonian, grid)
    flow = free_flow(hamiltonian, t - potential.start)
    g = float(potential.quartic(t))
    j = float(potential.source(t))
    general = potential.general
    general_live = general is not None and potential.general_support[0] <= t <= potential.general_support[1]

    def generator(q, p):
        qf, pf = flow(q, p)
        value = g / 24.0 * qf ** 4 + j * qf
        if general_live:
            value = value + general(t, qf, pf)
        return value * chi(qf, pf)

    return symbol_from_function(grid, generator, real_observable=True)


def _potential_bound(
    hamiltonian: QuadraticHamiltonian,
    potential: PotentialSpec,
    grid: PhaseSpaceGrid,
    times: np.ndarray,
    chi: Callable,
) -> float:
    q, p = grid.mesh()
    weight = chi(q, p)
    quartic_sup = float(np.max(np.abs(q ** 4 / 24.0 * weight)))
    source_sup = float(np.max(np.abs(q * weight)))
    bound = (
        float(np.max(np.abs(potential.quartic(times)))) * quartic_sup
        + float(np.max(np.abs(potential.source(times)))) * source_sup
    )
    if potential.general is not None:
        samples = times[:: max(len(times) // 8, 1)]
        bound += max(
            interaction_potential(hamiltonian, potential, grid, float(t), chi).sup_norm() for t in samples
        )
    return bound


def scattering_operator_star(
    hamiltonian: QuadraticHamiltonian,
    potential: PotentialSpec,
    grid: PhaseSpaceGrid,
    steps: int,
    band_limit: BandLimitPolicy = BandLimitPolicy.WARN,
    tolerances: Optional[Mapping[str, float]] = None,
) -> Symbol:
    """
    Scattering symbol S(T2) of i hbar dS/dt = V_I(t) * S, S(T1) = 1.

    Args:
        hamiltonian (QuadraticHamiltonian): H0
        potential (PotentialSpec): interaction and window
        grid (PhaseSpaceGrid): phase-space grid (balanced grids recommended)
        steps (int): uniform RK4 steps
        band_limit (BandLimitPolicy): reaction when V_I or S - 1 leaves the band-limited domain
        tolerances (Optional[Mapping[str, float]]): overrides of the default table

    Returns:
        Symbol: S in the interaction picture referenced to T1

    Raises:
        StepResolutionError: If dt sup|V_I| / hbar reaches the configured bound.
        BandLimitError: Under the strict policy, when a monitored symbol is not band-limited.
    """
    one = constant_symbol(grid, 1.0)
    if potential.is_zero:
        return one
    tolerances = resolve_tolerances(tolerances)
    started = time.perf_counter()
    hbar = grid.hbar
    chi = potential.confinement.cutoff(hamiltonian, grid)
    dt = potential.duration / steps
    times = potential.start + dt * np.arange(steps + 1)

    ratio = dt * _potential_bound(hamiltonian, potential, grid, times, chi) / hbar
    if ratio >= tolerances["step_resolution"]:
        raise StepResolutionError(f"dt sup|V_I| / hbar = {ratio:.3f} >= {tolerances['step_resolution']}")

    def rate(t: float, s: np.ndarray) -> np.ndarray:
        v = interaction_potential(hamiltonian, potential, grid, t, chi)
        return star(v, Symbol(grid, s), SPECTRAL, BandLimitPolicy.IGNORE).values / (1j * hbar)

    monitor_every = max(steps // 8, 1)
    logger.info(f"Star-route integration on N={grid.points} over [{potential.start}, {potential.end}] with {steps} steps")
    s = np.ones((grid.points, grid.points), dtype=complex)
    for k in range(steps):
        t = times[k]
        k1 = rate(t, s)
        k2 = rate(t + 0.5 * dt, s + 0.5 * dt * k1)
        k3 = rate(t + 0.5 * dt, s + 0.5 * dt * k2)
        k4 = rate(t + dt, s + dt * k3)
        s = s + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if band_limit != BandLimitPolicy.IGNORE and (k + 1) % monitor_every == 0:
            check_band_limit(interaction_potential(hamiltonian, potential, grid, t, chi), band_limit, tolerances, f"V_I({t:.3f})")
            check_band_limit(Symbol(grid, s - 1.0), band_limit, tolerances, f"S({t + dt:.3f}) - 1")
    logger.info(f"Star-route integration finished in {time.perf_counter() - started:.2f}s")
    return Symbol(grid, s)
