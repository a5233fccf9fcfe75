from dataclasses import dataclass
from functools import cached_property

import numpy as np

from src.app.utils.errors import GridError

MIN_POINTS = 8


@dataclass(frozen=True)
class PhaseSpaceGrid:
    """
    Periodic (q, p) grid on [-L, L) x [-P, P).

    Attributes:
        half_extent (float): L, half-width of the position box
        points (int): N, number of grid points per axis (even, >= 8)
        hbar (float): reduced Planck constant used by every transform on this grid
    """
    half_extent: float
    points: int
    hbar: float

    def __post_init__(self):
        if not isinstance(self.points, (int, np.integer)) or isinstance(self.points, bool):
            raise GridError(f"N must be an integer, got {self.points!r}")
        if self.points % 2 != 0:
            raise GridError(f"N must be even, got {self.points}")
        if self.points < MIN_POINTS:
            raise GridError(f"N must be at least {MIN_POINTS}, got {self.points}")
        if not self.half_extent > 0:
            raise GridError(f"L must be positive, got {self.half_extent}")
        if not self.hbar > 0:
            raise GridError(f"hbar must be positive, got {self.hbar}")

    @property
    def dq(self) -> float:
        return 2.0 * self.half_extent / self.points

    @property
    def dp(self) -> float:
        return 2.0 * np.pi * self.hbar / (2.0 * self.half_extent)

    @property
    def momentum_extent(self) -> float:
        """P = N * dp / 2."""
        return self.points * self.dp / 2.0

    @cached_property
    def q(self) -> np.ndarray:
        values = -self.half_extent + self.dq * np.arange(self.points)
        values.setflags(write=False)
        return values

    @cached_property
    def p(self) -> np.ndarray:
        values = -self.momentum_extent + self.dp * np.arange(self.points)
        values.setflags(write=False)
        return values

    def mesh(self):
        """(Q, P) arrays indexed (q-index, p-index)."""
        return np.meshgrid(self.q, self.p, indexing="ij")

    @property
    def cell_area(self) -> float:
        return self.dq * self.dp

    def matches(self, other: "PhaseSpaceGrid") -> bool:
        return (
            self.points == other.points
            and np.isclose(self.half_extent, other.half_extent, rtol=1e-14, atol=0.0)
            and np.isclose(self.hbar, other.hbar, rtol=1e-14, atol=0.0)
        )

    def to_dict(self) -> dict:
        return {"half_extent": self.half_extent, "points": int(self.points), "hbar": self.hbar}


def make_grid(half_extent: float, points: int, hbar: float) -> PhaseSpaceGrid:
    """
    Build a validated phase-space grid.

    Args:
        half_extent: L > 0
        points: N, even and >= 8
        hbar: hbar > 0

    Returns:
        PhaseSpaceGrid: grid with dq * dp * N == 2 * pi * hbar

    Raises:
        GridError: On odd or tiny N, or non-positive L or hbar.
    """
    return PhaseSpaceGrid(half_extent=float(half_extent), points=points, hbar=float(hbar))


def balanced_grid(points: int, hbar: float) -> PhaseSpaceGrid:
    """Grid whose position and momentum half-widths coincide (L == P)."""
    half_extent = float(np.sqrt(np.pi * hbar * points / 2.0))
    return make_grid(half_extent, points, hbar)
