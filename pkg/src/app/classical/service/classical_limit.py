"""
Classical limit of the scattering symbol: conj(S) * Phi * S against Phi
composed with the classical scattering map, for Phi in {q, p}.
"""
from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Sequence

import numpy as np

from src.app.classical.domain.duffing import DuffingParams
from src.app.classical.service.duffing import classical_scattering_map
from src.app.dynamics.domain.hamiltonian import QuadraticHamiltonian
from src.app.dynamics.domain.potential import PotentialSpec
from src.app.dynamics.domain.route import ScatteringRoute
from src.app.dynamics.service.hilbert_route import minimum_hilbert_steps
from src.app.dynamics.service.properties import scattering_operator
from src.app.moyal.service.diagnostics import loglog_slope
from src.app.phase_space.domain.grid import balanced_grid
from src.app.phase_space.service.weyl import (
    interior_mask,
    momentum_operator,
    position_operator,
    weyl_quantize,
    weyl_symbol_of,
)
from src.app.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class ClassicalLimitReport:
    """Sup errors of the Heisenberg-picture position and momentum symbols per hbar."""
    hbars: List[float]
    points: List[int] = field(default_factory=list)
    position_errors: List[float] = field(default_factory=list)
    momentum_errors: List[float] = field(default_factory=list)

    @property
    def errors(self) -> List[float]:
        return [max(a, b) for a, b in zip(self.position_errors, self.momentum_errors)]

    @property
    def slope(self) -> float:
        return loglog_slope(self.hbars, self.errors)

    def rows(self) -> List[dict]:
        return [
            {"hbar": h, "points": n, "position_error": eq, "momentum_error": ep}
            for h, n, eq, ep in zip(self.hbars, self.points, self.position_errors, self.momentum_errors)
        ]


def _balanced_points(half_extent: float, hbar: float) -> int:
    """Smallest even N whose balanced grid reaches ``half_extent``."""
    points = int(np.ceil(2.0 * half_extent ** 2 / (np.pi * hbar)))
    return points + points % 2


def classical_limit_study(
    potential: PotentialSpec,
    hbars: Sequence[float] = (0.4, 0.2, 0.1, 0.05),
    mass: float = 1.0,
    half_extent: float = 4.0,
    radius: float = 1.0,
    route: ScatteringRoute = ScatteringRoute.HILBERT,
    classical_steps: int = 4000,
    tolerances: Optional[Mapping[str, float]] = None,
) -> ClassicalLimitReport:
    """
    For each hbar build a balanced grid reaching ``half_extent``, compute S and
    compare the symbols of S^dagger Q S and S^dagger P S with the classical
    map on the disc q^2 + p^2 <= radius^2.
    """
    hamiltonian = QuadraticHamiltonian.oscillator(mass)
    params = DuffingParams.from_potential(potential, mass)
    report = ClassicalLimitReport(hbars=[float(h) for h in hbars])
    for hbar in report.hbars:
        grid = balanced_grid(_balanced_points(half_extent, hbar), hbar)
        steps = minimum_hilbert_steps(hamiltonian, potential, grid, tolerances=tolerances)
        logger.info(f"Classical limit at hbar={hbar}: N={grid.points}, {steps} steps")
        s = weyl_quantize(scattering_operator(route, hamiltonian, potential, grid, steps, tolerances))
        s_dagger = s.adjoint()
        heisenberg_q = weyl_symbol_of(s_dagger @ position_operator(grid) @ s)
        heisenberg_p = weyl_symbol_of(s_dagger @ momentum_operator(grid) @ s)

        mask = interior_mask(grid, radius)
        q, p = grid.mesh()
        mapped_q, mapped_p = classical_scattering_map(params, (q[mask], p[mask]), classical_steps, tolerances)
        report.points.append(grid.points)
        report.position_errors.append(float(np.max(np.abs(heisenberg_q.values[mask] - mapped_q))))
        report.momentum_errors.append(float(np.max(np.abs(heisenberg_p.values[mask] - mapped_p))))
    logger.info(f"Classical limit slope {report.slope:.3f} over hbar {report.hbars}")
    return report
