"""
Action functional of the driven oscillator and its stationarity on solutions.
"""
from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import simpson

from src.app.classical.domain.duffing import DuffingParams, Trajectory
from src.app.classical.domain.lattice import LagrangianSpec
from src.app.classical.service.duffing import solve_duffing
from src.app.moyal.service.diagnostics import loglog_slope
from src.app.utils.errors import WindowMismatchError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)


def evaluate_action(trajectory: Trajectory, spec: LagrangianSpec, envelopes: DuffingParams) -> np.ndarray:
    """
    int (q'^2 / 2 - m^2 q^2 / 2 - g q^4 / 4! - j q) dt by Simpson's rule over the samples.

    The mass comes from ``spec``; g, j and the window from ``envelopes``.

    Raises:
        WindowMismatchError: If the samples do not span [T1, T2].
    """
    span = max(abs(envelopes.start), abs(envelopes.end), 1.0)
    if abs(trajectory.start - envelopes.start) > 1e-12 * span or abs(trajectory.end - envelopes.end) > 1e-12 * span:
        raise WindowMismatchError(
            f"trajectory covers [{trajectory.start}, {trajectory.end}], window is [{envelopes.start}, {envelopes.end}]"
        )
    t = trajectory.times
    shape = (-1,) + (1,) * (trajectory.q.ndim - 1)
    g = envelopes.quartic(t).reshape(shape)
    j = envelopes.source(t).reshape(shape)
    q, velocity = trajectory.q, trajectory.p
    lagrangian = 0.5 * velocity ** 2 - 0.5 * spec.mass ** 2 * q ** 2 - g * q ** 4 / 24.0 - j * q
    return simpson(lagrangian, x=t, axis=0)


def smooth_variation(times: np.ndarray, coefficients: Sequence[float]) -> Tuple[np.ndarray, np.ndarray]:
    """
    eta = sin^2(pi tau / T) sum_n c_n sin(n pi tau / T) and its derivative;
    eta and eta' vanish at both window ends.
    """
    tau = times - times[0]
    period = times[-1] - times[0]
    k = np.pi / period
    bump = np.sin(k * tau) ** 2
    bump_rate = k * np.sin(2.0 * k * tau)
    wave = np.zeros_like(tau)
    wave_rate = np.zeros_like(tau)
    for n, c in enumerate(coefficients, start=1):
        wave += c * np.sin(n * k * tau)
        wave_rate += c * n * k * np.cos(n * k * tau)
    return bump * wave, bump_rate * wave + bump * wave_rate


@dataclass
class ActionStationarityReport:
    """Mean |J[q + delta eta] - J[q]| over random variations, per delta."""
    deltas: List[float]
    variations: List[float] = field(default_factory=list)
    solution_action: float = 0.0

    @property
    def slope(self) -> float:
        return loglog_slope(self.deltas, self.variations)

    def rows(self) -> List[dict]:
        return [{"delta": d, "variation": v} for d, v in zip(self.deltas, self.variations)]


def action_stationarity_study(
    params: DuffingParams,
    initial: Tuple[float, float],
    steps: int,
    deltas: Sequence[float] = (1e-2, 5e-3, 2.5e-3, 1.25e-3),
    perturbations: int = 20,
    modes: int = 3,
    seed: int = 0,
    tolerances: Optional[Mapping[str, float]] = None,
) -> ActionStationarityReport:
    """
    Perturb a numerical solution by random smooth compactly supported shapes;
    the action changes at second order in the amplitude.
    """
    spec = LagrangianSpec(mass=params.mass)
    solution = solve_duffing(params, initial, steps, tolerances)
    reference = float(evaluate_action(solution, spec, params))
    rng = np.random.default_rng(seed)
    shapes = [smooth_variation(solution.times, rng.standard_normal(modes)) for _ in range(perturbations)]
    report = ActionStationarityReport(deltas=[float(d) for d in deltas], solution_action=reference)
    for delta in report.deltas:
        changes = [
            abs(float(evaluate_action(solution.perturbed(eta, rate, delta), spec, params)) - reference)
            for eta, rate in shapes
        ]
        report.variations.append(float(np.mean(changes)))
    logger.info(f"Action stationarity: slope {report.slope:.3f} over deltas {report.deltas}")
    return report
