from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple

import numpy as np

from src.app.dynamics.domain.hamiltonian import QuadraticHamiltonian
from src.app.dynamics.domain.potential import PotentialSpec
from src.app.dynamics.domain.route import ScatteringRoute
from src.app.phase_space.domain.grid import PhaseSpaceGrid
from src.app.phase_space.domain.symbol import Symbol
from src.app.utils.errors import OrderBoundError, PulseWindowError

MAX_INSERTIONS = 2


@dataclass(frozen=True)
class GreenRequest:
    """
    N-th functional derivative of S(j) at j = 0, sampled by smoothed sources.

    Attributes:
        times (Tuple[float, ...]): insertion times t_1..t_N, distinct, inside (T1, T2)
        base (PotentialSpec): V0 and the time window
        hamiltonian (QuadraticHamiltonian): H0
        grid (PhaseSpaceGrid): phase-space grid of every scattering run
        steps (int): time steps per scattering run
        epsilons (Tuple[float, ...]): amplitude ladder, decreasing
        sigmas (Tuple[float, ...]): width ladder, decreasing
        extrapolate (bool): Richardson in epsilon^2 then sigma^2
        route (ScatteringRoute): integrator for the scattering runs
    """
    times: Tuple[float, ...]
    base: PotentialSpec
    hamiltonian: QuadraticHamiltonian
    grid: PhaseSpaceGrid
    steps: int
    epsilons: Tuple[float, ...] = (0.2, 0.1, 0.05)
    sigmas: Tuple[float, ...] = (0.4, 0.2, 0.1)
    extrapolate: bool = True
    route: ScatteringRoute = ScatteringRoute.STAR

    def __post_init__(self):
        times = tuple(float(t) for t in self.times)
        if not 1 <= len(times) <= MAX_INSERTIONS:
            raise OrderBoundError(f"supported insertion counts are 1..{MAX_INSERTIONS}, got {len(times)}")
        if len(set(times)) != len(times):
            raise PulseWindowError(f"insertion times must be distinct, got {times}")
        for t in times:
            if not self.base.start < t < self.base.end:
                raise PulseWindowError(f"insertion time {t} outside ({self.base.start}, {self.base.end})")
        if not self.epsilons or not self.sigmas:
            raise PulseWindowError("epsilon and sigma ladders must not be empty")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "epsilons", tuple(float(e) for e in self.epsilons))
        object.__setattr__(self, "sigmas", tuple(float(s) for s in self.sigmas))
        object.__setattr__(self, "route", ScatteringRoute(self.route))

    @property
    def order(self) -> int:
        return len(self.times)

    def swapped(self) -> "GreenRequest":
        """Same request with the insertion times reversed."""
        return replace(self, times=tuple(reversed(self.times)))


@dataclass(frozen=True)
class ConvergenceRow:
    epsilon: float
    sigma: float
    estimate_norm: float
    residual: float

    def to_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "sigma": self.sigma,
            "estimate_norm": self.estimate_norm,
            "residual": self.residual,
        }


@dataclass
class GreenResult:
    """
    Green-function symbol with its convergence record.

    Rows with epsilon = 0 hold epsilon-extrapolated estimates per sigma; the row
    with both zero holds the final estimate. Residuals are relative to the final
    estimate on the comparison mask.
    """
    symbol: Symbol
    rows: List[ConvergenceRow] = field(default_factory=list)
    cauchy_error: float = 0.0
    epsilon_slope: Optional[float] = None
    mask: Optional[np.ndarray] = field(default=None, repr=False)
