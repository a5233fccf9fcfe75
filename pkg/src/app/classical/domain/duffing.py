from dataclasses import asdict, dataclass, field
from typing import Tuple

import numpy as np

from src.app.config.default_settings import DEFAULT_TOLERANCES
from src.app.dynamics.domain.potential import PotentialSpec, PulseTrain
from src.app.utils.errors import GridError, PulseWindowError, ShapeMismatchError


@dataclass(frozen=True)
class DuffingParams:
    """
    q'' + m^2 q + g(t) q^3 / 3! = -j(t) on the window [T1, T2].

    Attributes:
        mass (float): oscillator frequency m
        start (float): T1
        end (float): T2
        quartic (PulseTrain): g(t)
        source (PulseTrain): j(t)
    """
    mass: float
    start: float
    end: float
    quartic: PulseTrain = field(default_factory=PulseTrain)
    source: PulseTrain = field(default_factory=PulseTrain)

    def __post_init__(self):
        if not self.mass > 0:
            raise GridError(f"mass must be positive, got {self.mass}")
        if not self.end > self.start:
            raise PulseWindowError(f"empty time window [{self.start}, {self.end}]")
        threshold = DEFAULT_TOLERANCES["potential_tail"]
        for name, train in (("g", self.quartic), ("j", self.source)):
            support = train.support(threshold)
            if support is not None and not (self.start < support[0] and support[1] < self.end):
                raise PulseWindowError(
                    f"{name}(t) support [{support[0]:.4f}, {support[1]:.4f}] not inside ({self.start}, {self.end})"
                )

    @classmethod
    def from_potential(cls, potential: PotentialSpec, mass: float = 1.0) -> "DuffingParams":
        """Classical counterpart of an oscillator interaction; the confinement cut-off is dropped."""
        return cls(mass, potential.start, potential.end, potential.quartic, potential.source)

    @property
    def duration(self) -> float:
        return self.end - self.start

    @property
    def is_free(self) -> bool:
        return self.quartic.is_zero and self.source.is_zero

    def force(self, t: float, q):
        """p' = -m^2 q - g q^3 / 6 - j."""
        return -self.mass ** 2 * q - self.quartic(t) * q ** 3 / 6.0 - self.source(t)

    def to_dict(self) -> dict:
        return {
            "mass": self.mass,
            "start": self.start,
            "end": self.end,
            "quartic": [asdict(pulse) for pulse in self.quartic.pulses],
            "source": [asdict(pulse) for pulse in self.source.pulses],
        }


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Samples (t, q, p) on a uniform time grid; trailing axes of q and p carry
    a batch of initial conditions.
    """
    times: np.ndarray
    q: np.ndarray
    p: np.ndarray

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        q = np.asarray(self.q, dtype=float)
        p = np.asarray(self.p, dtype=float)
        if times.ndim != 1 or q.shape != p.shape or q.shape[:1] != times.shape:
            raise ShapeMismatchError(f"trajectory samples {q.shape} and {p.shape} do not match {times.shape} times")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", p)

    @property
    def start(self) -> float:
        return float(self.times[0])

    @property
    def end(self) -> float:
        return float(self.times[-1])

    @property
    def final(self) -> Tuple[np.ndarray, np.ndarray]:
        return self.q[-1], self.p[-1]

    def energy(self, mass: float) -> np.ndarray:
        """(p^2 + m^2 q^2) / 2 along the trajectory."""
        return 0.5 * (self.p ** 2 + mass ** 2 * self.q ** 2)

    def perturbed(self, shape: np.ndarray, rate: np.ndarray, delta: float) -> "Trajectory":
        """Path q + delta eta with velocity p + delta eta'."""
        return Trajectory(self.times, self.q + delta * shape, self.p + delta * rate)
