"""
Exact scattering symbol of the oscillator driven by a linear source j(t) q.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.integrate import cumulative_trapezoid, simpson

from src.app.dynamics.domain.potential import PulseTrain
from src.app.phase_space.domain.grid import PhaseSpaceGrid
from src.app.phase_space.domain.symbol import Symbol
from src.app.phase_space.service.weyl import symbol_from_function


@dataclass(frozen=True)
class DrivenOscillatorConstants:
    """
    S = exp((i / hbar)(alpha q + beta p + gamma)) for H0 = (p^2 + m^2 q^2) / 2
    and V = j(t) q, referenced to T1.
    """
    alpha: float
    beta: float
    gamma: float

    def symbol(self, grid: PhaseSpaceGrid) -> Symbol:
        alpha, beta, gamma, hbar = self.alpha, self.beta, self.gamma, grid.hbar
        return symbol_from_function(grid, lambda q, p: np.exp(1j * (alpha * q + beta * p + gamma) / hbar))

    @property
    def classical_shift(self) -> Tuple[float, float]:
        """Translation (dq, dp) applied by the interaction-picture scattering map."""
        return -self.beta, self.alpha


def driven_oscillator_closed_form(
    source: PulseTrain,
    start: float,
    end: float,
    mass: float = 1.0,
    samples: int = 200001,
) -> DrivenOscillatorConstants:
    """
    alpha = -int j cos(m tau), beta = -int j sin(m tau) / m and
    gamma = 1/2 int int_{t > t'} j(t) j(t') sin(m (t - t')) / m, with tau = t - T1.

    The second-order Magnus term is exact because commutators of linear
    symbols are constants.
    """
    t = np.linspace(start, end, samples)
    tau = t - start
    j = source(t)
    cos_part = j * np.cos(mass * tau)
    sin_part = j * np.sin(mass * tau)
    alpha = -simpson(cos_part, x=t)
    beta = -simpson(sin_part, x=t) / mass
    running_cos = cumulative_trapezoid(cos_part, t, initial=0.0)
    running_sin = cumulative_trapezoid(sin_part, t, initial=0.0)
    inner = (np.sin(mass * tau) * running_cos - np.cos(mass * tau) * running_sin) / mass
    gamma = 0.5 * simpson(j * inner, x=t)
    return DrivenOscillatorConstants(float(alpha), float(beta), float(gamma))
