from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr

from src.app.dynamics.domain.potential import GaussianPulse, PulseTrain
from src.app.utils.errors import PulseWindowError


@dataclass(frozen=True)
class SourcePulse:
    """
    Smoothed delta amplitude * phi_sigma(t - t0), phi_sigma the unit-mass Gaussian.

    Attributes:
        center (float): t0
        width (float): sigma > 0
        amplitude (float): epsilon
    """
    center: float
    width: float
    amplitude: float

    def __post_init__(self):
        if not self.width > 0:
            raise PulseWindowError(f"source width must be positive, got {self.width}")

    @property
    def peak(self) -> float:
        return self.amplitude / (self.width * np.sqrt(2.0 * np.pi))

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return self.peak * np.exp(-((t - self.center) ** 2) / (2.0 * self.width ** 2))

    def tail_mass(self, start: float, end: float) -> float:
        """|epsilon| times the profile mass outside [start, end]."""
        below = ndtr((start - self.center) / self.width)
        above = ndtr((self.center - end) / self.width)
        return float(abs(self.amplitude) * (below + above))

    def validate(self, start: float, end: float, tolerance: float = 1e-12) -> None:
        """
        Raises:
            PulseWindowError: If the profile mass outside (start, end) reaches the tolerance.
        """
        mass = self.tail_mass(start, end)
        if mass >= tolerance:
            raise PulseWindowError(
                f"source pulse at t0={self.center} with sigma={self.width} leaks {mass:.3e} outside [{start}, {end}]"
            )

    def as_train(self) -> PulseTrain:
        if self.amplitude == 0.0:
            return PulseTrain()
        return PulseTrain((GaussianPulse(self.center, self.width, self.peak),))
