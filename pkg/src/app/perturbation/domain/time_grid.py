from dataclasses import dataclass
from functools import cached_property

import numpy as np

from src.app.utils.errors import PulseWindowError

RULES = ("trapezoid", "simpson")


@dataclass(frozen=True)
class TimeGrid:
    """
    Composite quadrature on [T1, T2] whose nodes carry the field insertions.

    Attributes:
        start (float): T1
        end (float): T2
        nodes (int): number of quadrature nodes M (odd for Simpson)
        rule (str): "trapezoid" or "simpson"
    """
    start: float
    end: float
    nodes: int
    rule: str = "trapezoid"

    def __post_init__(self):
        if not self.end > self.start:
            raise PulseWindowError(f"empty time window [{self.start}, {self.end}]")
        if self.rule not in RULES:
            raise PulseWindowError(f"unknown quadrature rule {self.rule!r}, expected one of {RULES}")
        if self.nodes < 2:
            raise PulseWindowError(f"need at least two quadrature nodes, got {self.nodes}")
        if self.rule == "simpson" and self.nodes % 2 == 0:
            raise PulseWindowError(f"Simpson's rule needs an odd node count, got {self.nodes}")

    @cached_property
    def times(self) -> np.ndarray:
        values = np.linspace(self.start, self.end, self.nodes)
        values.setflags(write=False)
        return values

    @cached_property
    def weights(self) -> np.ndarray:
        h = (self.end - self.start) / (self.nodes - 1)
        if self.rule == "trapezoid":
            weights = np.full(self.nodes, h)
            weights[[0, -1]] = 0.5 * h
        else:
            weights = np.full(self.nodes, 2.0 * h / 3.0)
            weights[1::2] = 4.0 * h / 3.0
            weights[[0, -1]] = h / 3.0
        weights.setflags(write=False)
        return weights

    def sample(self, envelope) -> np.ndarray:
        """Envelope values at the nodes."""
        return np.asarray(envelope(self.times), dtype=float) * np.ones(self.nodes)

    def to_dict(self) -> dict:
        return {"start": self.start, "end": self.end, "nodes": self.nodes, "rule": self.rule}
