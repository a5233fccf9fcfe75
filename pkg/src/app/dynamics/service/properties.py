"""
Structural properties of the scattering symbol: route equivalence and
convergence order, causality, and reference-window covariance.
"""
from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Sequence

import numpy as np

from src.app.dynamics.domain.hamiltonian import QuadraticHamiltonian
from src.app.dynamics.domain.potential import PotentialSpec
from src.app.dynamics.domain.route import ScatteringRoute
from src.app.dynamics.service.flow import free_flow, transport_symbol
from src.app.dynamics.service.hilbert_route import scattering_operator_hilbert
from src.app.dynamics.service.star_route import scattering_operator_star
from src.app.moyal.domain.star_method import SPECTRAL, BandLimitPolicy
from src.app.moyal.service.diagnostics import loglog_slope
from src.app.moyal.service.star import star
from src.app.phase_space.domain.grid import PhaseSpaceGrid
from src.app.phase_space.domain.symbol import Symbol
from src.app.utils.errors import PulseWindowError


def scattering_operator(
    route: ScatteringRoute,
    hamiltonian: QuadraticHamiltonian,
    potential: PotentialSpec,
    grid: PhaseSpaceGrid,
    steps: int,
    tolerances: Optional[Mapping[str, float]] = None,
    band_limit: BandLimitPolicy = BandLimitPolicy.WARN,
) -> Symbol:
    if ScatteringRoute(route) == ScatteringRoute.HILBERT:
        return scattering_operator_hilbert(hamiltonian, potential, grid, steps, tolerances)
    return scattering_operator_star(hamiltonian, potential, grid, steps, band_limit, tolerances)


def causality_residual(
    hamiltonian: QuadraticHamiltonian,
    late_a: PotentialSpec,
    late_b: PotentialSpec,
    early: PotentialSpec,
    grid: PhaseSpaceGrid,
    steps: int,
    route: ScatteringRoute = ScatteringRoute.HILBERT,
    mask: Optional[np.ndarray] = None,
) -> float:
    """
    sup |S(Va + dV) * conj(S(Vb + dV)) - S(Va) * conj(S(Vb))| where Va and Vb
    agree before t0 and dV is supported before t0. Unitary symbols have conj(S)
    as their star inverse.
    """
    def ratio(a: PotentialSpec, b: PotentialSpec) -> Symbol:
        s_a = scattering_operator(route, hamiltonian, a, grid, steps)
        s_b = scattering_operator(route, hamiltonian, b, grid, steps)
        return star(s_a, s_b.conj(), SPECTRAL, BandLimitPolicy.IGNORE)

    perturbed = ratio(late_a + early, late_b + early)
    bare = ratio(late_a, late_b)
    return (perturbed - bare).sup_norm(mask)


@dataclass
class RouteConvergenceReport:
    """Self-convergence of one route under step doubling."""
    route: ScatteringRoute
    steps: List[int]
    differences: List[float] = field(default_factory=list)

    @property
    def order(self) -> float:
        """Slope of log(difference) against log(dt)."""
        dts = [1.0 / s for s in self.steps[:-1]]
        return loglog_slope(dts, self.differences)

    def rows(self) -> List[dict]:
        return [
            {"route": self.route.value, "steps": s, "difference": d}
            for s, d in zip(self.steps[:-1], self.differences)
        ]


def route_convergence_study(
    route: ScatteringRoute,
    hamiltonian: QuadraticHamiltonian,
    potential: PotentialSpec,
    grid: PhaseSpaceGrid,
    steps: Sequence[int],
    mask: Optional[np.ndarray] = None,
    tolerances: Optional[Mapping[str, float]] = None,
) -> RouteConvergenceReport:
    """
    Differences between consecutive resolutions, sup |S(n_k) - S(n_{k+1})|;
    with doubling steps they fall as dt^2 (Hilbert) and dt^4 (star).
    """
    route = ScatteringRoute(route)
    report = RouteConvergenceReport(route=route, steps=list(steps))
    symbols = [scattering_operator(route, hamiltonian, potential, grid, n, tolerances) for n in report.steps]
    for coarse, fine in zip(symbols[:-1], symbols[1:]):
        report.differences.append((coarse - fine).sup_norm(mask))
    return report


def window_shift_consistency(
    hamiltonian: QuadraticHamiltonian,
    potential: PotentialSpec,
    grid: PhaseSpaceGrid,
    shift: float,
    steps: int,
    route: ScatteringRoute = ScatteringRoute.STAR,
    mask: Optional[np.ndarray] = None,
) -> float:
    """
    Recompute S on [T1 - tau, T2 - tau] with the same V and compare it with
    S transported by the free flow over tau: S' = S o free_flow(tau).

    Raises:
        PulseWindowError: If V is not supported inside the shifted window.
    """
    if shift < 0:
        raise PulseWindowError(f"window shift must be non-negative, got {shift}")
    shifted = potential.with_window(potential.start - shift, potential.end - shift)
    original = scattering_operator(route, hamiltonian, potential, grid, steps)
    recomputed = scattering_operator(route, hamiltonian, shifted, grid, steps)
    transported = transport_symbol(original, free_flow(hamiltonian, shift), strict=False)
    return (recomputed - transported).sup_norm(mask)
