from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Tuple

import numpy as np

from src.app.config.default_settings import DEFAULT_TOLERANCES
from src.app.utils.errors import PulseWindowError, WindowMismatchError

from .hamiltonian import ConfinementWindow

# V(t, q, p) on broadcastable arrays
PhaseSpacePotential = Callable[[float, np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class GaussianPulse:
    """peak * exp(-(t - center)^2 / (2 width^2))."""
    center: float
    width: float
    peak: float

    def __post_init__(self):
        if not self.width > 0:
            raise PulseWindowError(f"pulse width must be positive, got {self.width}")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return self.peak * np.exp(-((t - self.center) ** 2) / (2.0 * self.width ** 2))

    def support(self, threshold: float = 1e-14) -> Tuple[float, float]:
        """Interval outside which |pulse| < threshold."""
        if abs(self.peak) <= threshold:
            return self.center, self.center
        reach = self.width * np.sqrt(2.0 * np.log(abs(self.peak) / threshold))
        return self.center - reach, self.center + reach


@dataclass(frozen=True)
class PulseTrain:
    """Sum of Gaussian pulses; the empty train is the zero envelope."""
    pulses: Tuple[GaussianPulse, ...] = ()

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        total = np.zeros_like(t)
        for pulse in self.pulses:
            total = total + pulse(t)
        return total

    def __add__(self, other: "PulseTrain") -> "PulseTrain":
        return PulseTrain(self.pulses + other.pulses)

    @property
    def is_zero(self) -> bool:
        return all(pulse.peak == 0.0 for pulse in self.pulses)

    def support(self, threshold: float = 1e-14) -> Optional[Tuple[float, float]]:
        live = [pulse.support(threshold) for pulse in self.pulses if pulse.peak != 0.0]
        if not live:
            return None
        return min(lo for lo, _ in live), max(hi for _, hi in live)

    def max_abs(self) -> float:
        return float(sum(abs(pulse.peak) for pulse in self.pulses))


@dataclass(frozen=True)
class PotentialSpec:
    """
    Interaction V(t, z) = chi(H0(z)) [g(t) q^4 / 4! + j(t) q + W(t, q, p)] on [T1, T2].

    Attributes:
        start (float): T1
        end (float): T2
        quartic (PulseTrain): g(t)
        source (PulseTrain): j(t)
        general (Optional[PhaseSpacePotential]): optional W(t, q, p)
        general_support (Optional[Tuple[float, float]]): closed interval carrying W
        confinement (ConfinementWindow): cut-off applied to every shape
    """
    start: float
    end: float
    quartic: PulseTrain = field(default_factory=PulseTrain)
    source: PulseTrain = field(default_factory=PulseTrain)
    general: Optional[PhaseSpacePotential] = None
    general_support: Optional[Tuple[float, float]] = None
    confinement: ConfinementWindow = field(default_factory=ConfinementWindow)

    def __post_init__(self):
        if not self.end > self.start:
            raise PulseWindowError(f"empty time window [{self.start}, {self.end}]")
        if self.general is not None and self.general_support is None:
            raise PulseWindowError("a general potential needs its support interval")
        self.validate_support()

    @property
    def duration(self) -> float:
        return self.end - self.start

    @property
    def is_zero(self) -> bool:
        return self.quartic.is_zero and self.source.is_zero and self.general is None

    def validate_support(self, threshold: Optional[float] = None) -> None:
        """
        Raises:
            PulseWindowError: If a coefficient is not negligible outside a closed subinterval of (T1, T2).
        """
        threshold = DEFAULT_TOLERANCES["potential_tail"] if threshold is None else threshold
        for name, train in (("g", self.quartic), ("j", self.source)):
            support = train.support(threshold)
            if support is not None and not (self.start < support[0] and support[1] < self.end):
                raise PulseWindowError(
                    f"{name}(t) support [{support[0]:.4f}, {support[1]:.4f}] "
                    f"not inside ({self.start}, {self.end})"
                )
        if self.general_support is not None:
            lo, hi = self.general_support
            if not (self.start < lo <= hi < self.end):
                raise PulseWindowError(f"general potential support [{lo}, {hi}] not inside the window")

    def with_window(self, start: float, end: float) -> "PotentialSpec":
        return replace(self, start=start, end=end)

    def with_source(self, source: PulseTrain) -> "PotentialSpec":
        return replace(self, source=source)

    def __add__(self, other: "PotentialSpec") -> "PotentialSpec":
        if (self.start, self.end) != (other.start, other.end):
            raise WindowMismatchError(
                f"cannot add potentials on [{self.start}, {self.end}] and [{other.start}, {other.end}]"
            )
        if self.general is not None and other.general is not None:
            first, second = self.general, other.general
            general = lambda t, q, p: first(t, q, p) + second(t, q, p)  # noqa: E731
            support = (
                min(self.general_support[0], other.general_support[0]),
                max(self.general_support[1], other.general_support[1]),
            )
        else:
            general = self.general if self.general is not None else other.general
            support = self.general_support if self.general is not None else other.general_support
        return replace(
            self,
            quartic=self.quartic + other.quartic,
            source=self.source + other.source,
            general=general,
            general_support=support,
        )
