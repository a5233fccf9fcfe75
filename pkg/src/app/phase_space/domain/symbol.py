from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from src.app.config.default_settings import DEFAULT_TOLERANCES
from src.app.utils.errors import (
    HermiticityError,
    NormalizationError,
    ShapeMismatchError,
)

from .grid import PhaseSpaceGrid

# f(q, p) evaluated on broadcastable arrays
SymbolGenerator = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _frozen(values: np.ndarray, dtype=complex) -> np.ndarray:
    array = np.array(values, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


def require_same_grid(*grids: PhaseSpaceGrid) -> PhaseSpaceGrid:
    first = grids[0]
    for other in grids[1:]:
        if not first.matches(other):
            raise ShapeMismatchError(f"grid mismatch: {first.to_dict()} vs {other.to_dict()}")
    return first


@dataclass(frozen=True, eq=False)
class Symbol:
    """
    Complex phase-space function sampled on a grid, indexed (q-index, p-index).

    Symbols built from an analytic function keep it as ``generator`` so that
    composition with classical flows stays exact.
    """
    grid: PhaseSpaceGrid
    values: np.ndarray
    real_observable: bool = False
    generator: Optional[SymbolGenerator] = field(default=None, repr=False)

    def __post_init__(self):
        values = _frozen(self.values)
        n = self.grid.points
        if values.shape != (n, n):
            raise ShapeMismatchError(f"symbol shape {values.shape} does not match grid ({n}, {n})")
        if self.real_observable:
            imag = float(np.max(np.abs(values.imag))) if values.size else 0.0
            if imag > DEFAULT_TOLERANCES["real_symbol_imag"]:
                raise HermiticityError(f"real-observable symbol has imaginary part {imag:.3e}")
        object.__setattr__(self, "values", values)

    def conj(self) -> "Symbol":
        """Pointwise complex conjugate (the adjoint under Weyl correspondence)."""
        generator = None
        if self.generator is not None:
            source = self.generator
            generator = lambda q, p: np.conj(source(q, p))  # noqa: E731
        return Symbol(self.grid, np.conj(self.values), self.real_observable, generator)

    def with_values(self, values: np.ndarray, real_observable: bool = False) -> "Symbol":
        return Symbol(self.grid, values, real_observable)

    def __add__(self, other):
        if isinstance(other, Symbol):
            require_same_grid(self.grid, other.grid)
            return Symbol(self.grid, self.values + other.values)
        return Symbol(self.grid, self.values + other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Symbol):
            require_same_grid(self.grid, other.grid)
            return Symbol(self.grid, self.values - other.values)
        return Symbol(self.grid, self.values - other)

    def __mul__(self, scalar):
        if isinstance(scalar, Symbol):
            raise TypeError("use star() or pointwise() for symbol products")
        return Symbol(self.grid, self.values * scalar)

    __rmul__ = __mul__

    def __neg__(self):
        return Symbol(self.grid, -self.values)

    def pointwise(self, other: "Symbol") -> "Symbol":
        """Commutative (classical) product."""
        require_same_grid(self.grid, other.grid)
        return Symbol(self.grid, self.values * other.values)

    def sup_norm(self, mask: Optional[np.ndarray] = None) -> float:
        values = self.values if mask is None else self.values[mask]
        return float(np.max(np.abs(values))) if values.size else 0.0


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Dense operator acting on position-grid wavefunctions."""
    grid: PhaseSpaceGrid
    entries: np.ndarray
    unitary: bool = False

    def __post_init__(self):
        entries = _frozen(self.entries)
        n = self.grid.points
        if entries.shape != (n, n):
            raise ShapeMismatchError(f"operator shape {entries.shape} does not match grid ({n}, {n})")
        object.__setattr__(self, "entries", entries)
        if self.unitary:
            defect = self.unitarity_defect()
            if defect >= DEFAULT_TOLERANCES["unitary_matrix"]:
                raise HermiticityError(f"matrix flagged unitary has defect {defect:.3e}")

    def unitarity_defect(self) -> float:
        m = self.entries
        return float(np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0]))))

    def hermiticity_defect(self) -> float:
        m = self.entries
        return float(np.max(np.abs(m - m.conj().T)))

    def adjoint(self) -> "OperatorMatrix":
        return OperatorMatrix(self.grid, self.entries.conj().T)

    def __matmul__(self, other):
        if isinstance(other, OperatorMatrix):
            require_same_grid(self.grid, other.grid)
            return OperatorMatrix(self.grid, self.entries @ other.entries)
        if isinstance(other, WaveFunction):
            require_same_grid(self.grid, other.grid)
            return WaveFunction(self.grid, self.entries @ other.values)
        return NotImplemented

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        require_same_grid(self.grid, other.grid)
        return OperatorMatrix(self.grid, self.entries + other.entries)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        require_same_grid(self.grid, other.grid)
        return OperatorMatrix(self.grid, self.entries - other.entries)

    def __mul__(self, scalar) -> "OperatorMatrix":
        return OperatorMatrix(self.grid, self.entries * scalar)

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class WaveFunction:
    """Position-grid wavefunction; normalization is sum |psi|^2 dq."""
    grid: PhaseSpaceGrid
    values: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        values = _frozen(self.values)
        if values.shape != (self.grid.points,):
            raise ShapeMismatchError(f"wavefunction shape {values.shape} does not match N={self.grid.points}")
        object.__setattr__(self, "values", values)
        if self.normalized and abs(self.norm() - 1.0) > DEFAULT_TOLERANCES["normalization"]:
            raise NormalizationError(f"wavefunction flagged normalized has norm {self.norm():.15f}")

    def norm(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2) * self.grid.dq)

    def normalize(self) -> "WaveFunction":
        return WaveFunction(self.grid, self.values / np.sqrt(self.norm()), normalized=True)

    def inner(self, other: "WaveFunction") -> complex:
        require_same_grid(self.grid, other.grid)
        return complex(np.vdot(self.values, other.values) * self.grid.dq)

    def projector(self) -> OperatorMatrix:
        """|psi><psi| as a grid matrix (dq carries the measure)."""
        return OperatorMatrix(self.grid, np.outer(self.values, self.values.conj()) * self.grid.dq)
