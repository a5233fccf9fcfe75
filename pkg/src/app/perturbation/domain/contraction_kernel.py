from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

from src.app.utils.errors import GridError

from .time_grid import TimeGrid

# K(t1, t2) on broadcastable arrays
KernelGenerator = Callable[[np.ndarray, np.ndarray], np.ndarray]


class KernelName(str, Enum):
    PAULI_JORDAN = "pauli-jordan"
    PV_TIMEORDERED = "pv-timeordered"
    FEYNMAN = "feynman"
    SYMMETRIC_PART = "symmetric-part"


def kernel_generator(name: KernelName, mass: float) -> KernelGenerator:
    """
    Closed forms for the oscillator q'' + m^2 q = 0:

        pauli-jordan    {q(t1), q(t2)} = sin(m (t2 - t1)) / m
        pv-timeordered  -(i / 2m) sin(m |t1 - t2|)
        feynman         (1 / 2m) exp(-i m |t1 - t2|)
        symmetric-part  (1 / 2m) cos(m (t1 - t2))

    feynman = pv-timeordered + symmetric-part.
    """
    name = KernelName(name)
    if name == KernelName.PAULI_JORDAN:
        return lambda t1, t2: np.sin(mass * (t2 - t1)) / mass
    if name == KernelName.PV_TIMEORDERED:
        return lambda t1, t2: -0.5j / mass * np.sin(mass * np.abs(t1 - t2))
    if name == KernelName.FEYNMAN:
        return lambda t1, t2: 0.5 / mass * np.exp(-1j * mass * np.abs(t1 - t2))
    return lambda t1, t2: 0.5 / mass * np.cos(mass * (t1 - t2)) + 0j


@dataclass(frozen=True, eq=False)
class ContractionKernel:
    """Two-point kernel sampled on the node pairs of a time grid."""
    name: KernelName
    mass: float
    time_grid: TimeGrid
    generator: KernelGenerator = field(repr=False, default=None)
    values: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        if not self.mass > 0:
            raise GridError(f"mass must be positive, got {self.mass}")
        name = KernelName(self.name)
        generator = self.generator or kernel_generator(name, self.mass)
        t1, t2 = np.meshgrid(self.time_grid.times, self.time_grid.times, indexing="ij")
        values = np.asarray(generator(t1, t2), dtype=complex)
        values.setflags(write=False)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "generator", generator)
        object.__setattr__(self, "values", values)

    @property
    def antisymmetric(self) -> bool:
        return bool(np.allclose(self.values, -self.values.T, rtol=0.0, atol=1e-15))

    @property
    def symmetric(self) -> bool:
        return bool(np.allclose(self.values, self.values.T, rtol=0.0, atol=1e-15))

    def of_lag(self, tau):
        """K as a function of t1 - t2 (stationary kernels)."""
        tau = np.asarray(tau, dtype=float)
        return np.asarray(self.generator(tau, np.zeros_like(tau)), dtype=complex)


def pauli_jordan_kernel(mass: float, time_grid: TimeGrid) -> ContractionKernel:
    """Poisson bracket of free solutions on node pairs."""
    return ContractionKernel(KernelName.PAULI_JORDAN, mass, time_grid)


def pv_timeordered_kernel(mass: float, time_grid: TimeGrid) -> ContractionKernel:
    return ContractionKernel(KernelName.PV_TIMEORDERED, mass, time_grid)


def feynman_kernel(mass: float, time_grid: TimeGrid) -> ContractionKernel:
    return ContractionKernel(KernelName.FEYNMAN, mass, time_grid)


def symmetric_part_kernel(mass: float, time_grid: TimeGrid) -> ContractionKernel:
    return ContractionKernel(KernelName.SYMMETRIC_PART, mass, time_grid)
