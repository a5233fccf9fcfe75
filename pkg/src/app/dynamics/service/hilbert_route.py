"""
Hilbert-space route: grid Hamiltonians, Cayley propagation and S = U0^-1 U.
"""
import time
from dataclasses import dataclass
from typing import Callable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import eigh, expm, solve

from src.app.config.core import resolve_tolerances
from src.app.dynamics.domain.hamiltonian import ConfinementWindow, QuadraticHamiltonian
from src.app.dynamics.domain.potential import PotentialSpec
from src.app.phase_space.domain.grid import PhaseSpaceGrid
from src.app.phase_space.domain.symbol import OperatorMatrix, Symbol, WaveFunction
from src.app.phase_space.service.states import coherent_state
from src.app.phase_space.service.weyl import (
    momentum_operator,
    position_operator,
    symbol_from_function,
    weyl_quantize,
    weyl_symbol_of,
)
from src.app.utils.errors import HermiticityError, StepResolutionError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)


def hamiltonian_operator(hamiltonian: QuadraticHamiltonian, grid: PhaseSpaceGrid) -> OperatorMatrix:
    """
    Weyl-ordered H0 assembled from the grid position and spectral momentum operators.

    The sampled symbol of a quadratic is not periodic on the box, so it is never
    quantized directly.
    """
    a, b, c = hamiltonian.matrix, hamiltonian.linear, hamiltonian.constant
    q = position_operator(grid).entries
    p = momentum_operator(grid).entries
    entries = (
        0.5 * a[0, 0] * position_operator(grid, 2).entries
        + 0.5 * a[1, 1] * momentum_operator(grid, 2).entries
        + 0.5 * a[0, 1] * (q @ p + p @ q)
        + b[0] * q
        + b[1] * p
        + c * np.eye(grid.points)
    )
    return OperatorMatrix(grid, entries)


def confinement_operator(
    hamiltonian: QuadraticHamiltonian,
    confinement: ConfinementWindow,
    grid: PhaseSpaceGrid,
) -> OperatorMatrix:
    """
    chi(H0)^(1/2) as a function of the grid Hamiltonian, U diag(sqrt(chi(E))) U^dagger.

    It commutes with the free propagator, like chi(H0(z)) with the free flow.
    """
    energies, vectors = eigh(hamiltonian_operator(hamiltonian, grid).entries)
    weights = np.sqrt(confinement.energy_profile(hamiltonian, grid)(energies))
    return OperatorMatrix(grid, (vectors * weights[None, :]) @ vectors.conj().T)


@dataclass(frozen=True)
class InteractionShapes:
    """
    Confined shapes C q^4 C / 4! and C q C with C = chi(H0)^(1/2), plus the
    phase-space cut-off used for general potentials.
    """
    quartic: OperatorMatrix
    source: OperatorMatrix
    cutoff: Callable


def interaction_shapes(
    hamiltonian: QuadraticHamiltonian,
    potential: PotentialSpec,
    grid: PhaseSpaceGrid,
) -> InteractionShapes:
    root = confinement_operator(hamiltonian, potential.confinement, grid).entries
    q = grid.q.astype(complex)
    quartic = (root * (q ** 4 / 24.0)[None, :]) @ root
    source = (root * q[None, :]) @ root
    return InteractionShapes(
        OperatorMatrix(grid, quartic),
        OperatorMatrix(grid, source),
        potential.confinement.cutoff(hamiltonian, grid),
    )


def cayley_step(hamiltonian: np.ndarray, dt: float, hbar: float) -> np.ndarray:
    """(1 + i dt H / 2 hbar)^-1 (1 - i dt H / 2 hbar), unitary for Hermitian H."""
    half = 0.5j * dt / hbar * hamiltonian
    identity = np.eye(hamiltonian.shape[0])
    return solve(identity + half, identity - half)


def _check_resolution(dt: float, norm: float, hbar: float, tolerance: float) -> None:
    ratio = dt * norm / hbar
    if ratio >= tolerance:
        raise StepResolutionError(
            f"time step {dt:.3e} does not resolve ||H|| = {norm:.3e}: dt ||H|| / hbar = {ratio:.3f} >= {tolerance}"
        )


def _step_norm(h0: OperatorMatrix, shapes: InteractionShapes, g_max: float, j_max: float) -> float:
    return float(
        np.linalg.norm(h0.entries, 2)
        + g_max * np.linalg.norm(shapes.quartic.entries, 2)
        + j_max * np.linalg.norm(shapes.source.entries, 2)
    )


def minimum_hilbert_steps(
    hamiltonian: QuadraticHamiltonian,
    potential: PotentialSpec,
    grid: PhaseSpaceGrid,
    safety: float = 0.8,
    tolerances: Optional[Mapping[str, float]] = None,
) -> int:
    """Fewest uniform steps with dt ||H|| / hbar below ``safety`` times the resolution bound."""
    tolerances = resolve_tolerances(tolerances)
    h0 = hamiltonian_operator(hamiltonian, grid)
    shapes = interaction_shapes(hamiltonian, potential, grid)
    norm = _step_norm(h0, shapes, potential.quartic.max_abs(), potential.source.max_abs())
    return max(int(np.ceil(potential.duration * norm / (grid.hbar * safety * tolerances["step_resolution"]))), 1)


def _check_hermitian(operator: OperatorMatrix, label: str, tolerance: float) -> None:
    scale = max(float(np.max(np.abs(operator.entries))), 1.0)
    defect = operator.hermiticity_defect() / scale
    if defect > tolerance:
        raise HermiticityError(f"{label} is not Hermitian (relative defect {defect:.3e})")


def free_evolution_hilbert(
    hamiltonian: QuadraticHamiltonian,
    grid: PhaseSpaceGrid,
    duration: float,
    steps: int,
    tolerances: Optional[Mapping[str, float]] = None,
) -> OperatorMatrix:
    """Free propagator by the same Cayley stepping as the interacting run."""
    tolerances = resolve_tolerances(tolerances)
    h0 = hamiltonian_operator(hamiltonian, grid)
    dt = duration / steps
    _check_resolution(dt, float(np.linalg.norm(h0.entries, 2)), grid.hbar, tolerances["step_resolution"])
    step = cayley_step(h0.entries, dt, grid.hbar)
    return OperatorMatrix(grid, np.linalg.matrix_power(step, steps))


def free_propagator(hamiltonian: QuadraticHamiltonian, grid: PhaseSpaceGrid, t: float) -> OperatorMatrix:
    """exp(-i t H0 / hbar) by matrix exponential."""
    h0 = hamiltonian_operator(hamiltonian, grid)
    return OperatorMatrix(grid, expm(-1j * t / grid.hbar * h0.entries))


def evolve_hilbert(
    hamiltonian: QuadraticHamiltonian,
    potential: PotentialSpec,
    grid: PhaseSpaceGrid,
    steps: int,
    tolerances: Optional[Mapping[str, float]] = None,
) -> OperatorMatrix:
    """
    Evolution operator U over [T1, T2] for H(t) = H0 + V(t).

    Each step is a Cayley (implicit midpoint) update with the Hamiltonian
    sampled at the step midpoint, so U is unitary up to rounding and the
    global error is second order in dt.

    Args:
        hamiltonian (QuadraticHamiltonian): H0
        potential (PotentialSpec): interaction and its window
        grid (PhaseSpaceGrid): position grid
        steps (int): number of uniform time steps
        tolerances (Optional[Mapping[str, float]]): overrides of the default table

    Returns:
        OperatorMatrix: U(T2, T1)

    Raises:
        StepResolutionError: If dt ||H|| / hbar reaches the configured bound.
        HermiticityError: If an assembled Hamiltonian is not Hermitian.
    """
    if potential.is_zero:
        return free_evolution_hilbert(hamiltonian, grid, potential.duration, steps, tolerances)
    tolerances = resolve_tolerances(tolerances)
    started = time.perf_counter()
    h0 = hamiltonian_operator(hamiltonian, grid)
    shapes = interaction_shapes(hamiltonian, potential, grid)
    for label, operator in (("H0", h0), ("quartic shape", shapes.quartic), ("source shape", shapes.source)):
        _check_hermitian(operator, label, tolerances["hermiticity"])

    dt = potential.duration / steps
    midpoints = potential.start + (np.arange(steps) + 0.5) * dt
    g = potential.quartic(midpoints)
    j = potential.source(midpoints)

    norm = _step_norm(h0, shapes, np.max(np.abs(g)), np.max(np.abs(j)))
    general = _general_operator(potential, grid, shapes.cutoff)
    if general is not None:
        norm += max(np.linalg.norm(general(t).entries, 2) for t in midpoints[:: max(steps // 8, 1)])
    _check_resolution(dt, float(norm), grid.hbar, tolerances["step_resolution"])

    logger.info(f"Hilbert evolution on N={grid.points} over [{potential.start}, {potential.end}] with {steps} steps")
    free_step = cayley_step(h0.entries, dt, grid.hbar)
    u = np.eye(grid.points, dtype=complex)
    for k, t in enumerate(midpoints):
        active = g[k] != 0.0 or j[k] != 0.0 or general is not None
        if not active:
            u = free_step @ u
            continue
        h = h0.entries + g[k] * shapes.quartic.entries + j[k] * shapes.source.entries
        if general is not None:
            h = h + general(t).entries
        u = cayley_step(h, dt, grid.hbar) @ u
    logger.info(f"Hilbert evolution finished in {time.perf_counter() - started:.2f}s")
    return OperatorMatrix(grid, u)


def _general_operator(potential: PotentialSpec, grid: PhaseSpaceGrid, chi: Callable):
    if potential.general is None:
        return None
    general = potential.general
    lo, hi = potential.general_support

    def operator_at(t: float) -> OperatorMatrix:
        if not lo <= t <= hi:
            return OperatorMatrix(grid, np.zeros((grid.points, grid.points)))
        shape = symbol_from_function(grid, lambda q, p: general(t, q, p) * chi(q, p), real_observable=True)
        return weyl_quantize(shape)

    return operator_at


def scattering_operator_hilbert(
    hamiltonian: QuadraticHamiltonian,
    potential: PotentialSpec,
    grid: PhaseSpaceGrid,
    steps: int,
    tolerances: Optional[Mapping[str, float]] = None,
) -> Symbol:
    """Weyl symbol of S = U0^-1 U, both propagators stepped identically."""
    u = evolve_hilbert(hamiltonian, potential, grid, steps, tolerances)
    u0 = free_evolution_hilbert(hamiltonian, grid, potential.duration, steps, tolerances)
    s = OperatorMatrix(grid, np.linalg.solve(u0.entries, u.entries))
    return weyl_symbol_of(s)


def coherent_fidelity(
    propagator: OperatorMatrix,
    centres: Sequence[Tuple[float, float]] = ((1.0, 0.0),),
    frequency: float = 1.0,
) -> List[float]:
    """|<psi|U|psi>| for coherent states centred at the given phase points."""
    fidelities = []
    for q0, p0 in centres:
        psi = coherent_state(propagator.grid, q0, p0, frequency)
        fidelities.append(abs(psi.inner(propagator @ psi)))
    return fidelities


def phase_space_centroid(psi: WaveFunction) -> Tuple[float, float]:
    """(<Q>, <P>) of a normalized grid state."""
    grid = psi.grid
    mean_q = float(np.real(np.sum(np.abs(psi.values) ** 2 * grid.q) * grid.dq))
    mean_p = float(np.real(psi.inner(momentum_operator(grid) @ psi)))
    return mean_q, mean_p
