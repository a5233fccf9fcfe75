from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np
from scipy.special import erfc

from src.app.phase_space.domain.grid import PhaseSpaceGrid
from src.app.utils.errors import HermiticityError, ShapeMismatchError, SupportEscapeError


@dataclass(frozen=True, eq=False)
class QuadraticHamiltonian:
    """
    H0(z) = 1/2 z^T A z + b^T z + c with z = (q, p).

    Attributes:
        matrix (np.ndarray): A, symmetric 2x2
        linear (np.ndarray): b
        constant (float): c
    """
    matrix: np.ndarray
    linear: np.ndarray = None
    constant: float = 0.0

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=float)
        linear = np.zeros(2) if self.linear is None else np.array(self.linear, dtype=float)
        if matrix.shape != (2, 2) or linear.shape != (2,):
            raise ShapeMismatchError(f"expected A 2x2 and b 2-vector, got {matrix.shape} and {linear.shape}")
        if not np.allclose(matrix, matrix.T, rtol=0.0, atol=1e-14):
            raise HermiticityError(f"quadratic part must be symmetric, got {matrix.tolist()}")
        matrix.setflags(write=False)
        linear.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "linear", linear)
        object.__setattr__(self, "constant", float(self.constant))

    @classmethod
    def oscillator(cls, mass: float = 1.0) -> "QuadraticHamiltonian":
        """(p^2 + m^2 q^2) / 2."""
        return cls(np.diag([mass ** 2, 1.0]))

    @classmethod
    def free_particle(cls) -> "QuadraticHamiltonian":
        return cls(np.diag([0.0, 1.0]))

    def __call__(self, q, p):
        a = self.matrix
        b = self.linear
        return (
            0.5 * (a[0, 0] * q * q + 2.0 * a[0, 1] * q * p + a[1, 1] * p * p)
            + b[0] * q
            + b[1] * p
            + self.constant
        )

    @property
    def positive_definite(self) -> bool:
        return bool(np.all(np.linalg.eigvalsh(self.matrix) > 0.0))

    def minimum(self) -> float:
        """Value at the critical point A z = -b (positive-definite A)."""
        q, p = np.linalg.solve(self.matrix, -self.linear)
        return float(self(q, p))

    def boundary_minimum(self, grid: PhaseSpaceGrid) -> float:
        """Minimum of H0 over the boundary of [-L, L] x [-P, P]."""
        a = self.matrix
        b = self.linear
        L, P = grid.half_extent, grid.momentum_extent
        candidates = []
        # edges q = +-L: quadratic in p
        for q in (-L, L):
            if a[1, 1] > 0:
                p_star = float(np.clip(-(a[0, 1] * q + b[1]) / a[1, 1], -P, P))
                candidates.append(self(q, p_star))
            candidates.extend(self(q, p) for p in (-P, P))
        # edges p = +-P: quadratic in q
        for p in (-P, P):
            if a[0, 0] > 0:
                q_star = float(np.clip(-(a[0, 1] * p + b[0]) / a[0, 0], -L, L))
                candidates.append(self(q_star, p))
            candidates.extend(self(q, p) for q in (-L, L))
        return float(min(candidates))

    def to_dict(self) -> dict:
        return {"A": self.matrix.tolist(), "b": self.linear.tolist(), "c": self.constant}


@dataclass(frozen=True)
class ConfinementWindow:
    """
    Smooth cut-off chi(H0(z)) that keeps potentials away from the box edges.

    With the energy radius rho(z) = sqrt(2 (H0(z) - min H0)) and rho_b its
    smallest value on the box boundary, chi = erfc((rho - rho_mid) / (sqrt(2) sigma)) / 2
    where rho_mid and sigma are fractions of rho_b. The profile is analytic, so
    confined shapes stay band-limited; chi depends on z only through H0 and is
    therefore invariant under the free flow. Comparisons are made on
    rho <= compare_fraction * rho_b, where chi equals 1 to working precision.
    """
    mid_fraction: float = 0.56
    width_fraction: float = 0.064
    compare_fraction: float = 0.1

    def __post_init__(self):
        if not (0.0 < self.compare_fraction < self.mid_fraction < 1.0 and self.width_fraction > 0.0):
            raise SupportEscapeError(
                "confinement fractions must satisfy 0 < compare < mid < 1 and width > 0, got "
                f"{self.compare_fraction}, {self.mid_fraction}, {self.width_fraction}"
            )

    def boundary_radius(self, hamiltonian: QuadraticHamiltonian, grid: PhaseSpaceGrid) -> float:
        if not hamiltonian.positive_definite:
            raise SupportEscapeError("confinement needs a positive-definite quadratic part of H0")
        level = hamiltonian.boundary_minimum(grid) - hamiltonian.minimum()
        if level <= 0.0:
            raise SupportEscapeError("the minimum of H0 lies outside the grid box")
        return float(np.sqrt(2.0 * level))

    def energy_profile(self, hamiltonian: QuadraticHamiltonian, grid: PhaseSpaceGrid) -> Callable:
        """chi as a function of the energy H0, also applied to the spectrum of the grid H0."""
        rho_b = self.boundary_radius(hamiltonian, grid)
        rho_mid = self.mid_fraction * rho_b
        scale = np.sqrt(2.0) * self.width_fraction * rho_b
        floor = hamiltonian.minimum()

        def profile(energy):
            rho = np.sqrt(np.maximum(2.0 * (np.asarray(energy) - floor), 0.0))
            return 0.5 * erfc((rho - rho_mid) / scale)

        return profile

    def cutoff(self, hamiltonian: QuadraticHamiltonian, grid: PhaseSpaceGrid) -> Callable:
        """chi(q, p) as a vectorized function."""
        profile = self.energy_profile(hamiltonian, grid)

        def chi(q, p):
            return profile(hamiltonian(q, p))

        return chi

    def comparison_mask(self, hamiltonian: QuadraticHamiltonian, grid: PhaseSpaceGrid) -> np.ndarray:
        """Grid points deep inside the confined region."""
        rho_b = self.boundary_radius(hamiltonian, grid)
        q, p = grid.mesh()
        rho = np.sqrt(np.maximum(2.0 * (hamiltonian(q, p) - hamiltonian.minimum()), 0.0))
        return rho <= self.compare_fraction * rho_b

    def to_dict(self) -> dict:
        return {
            "mid_fraction": self.mid_fraction,
            "width_fraction": self.width_fraction,
            "compare_fraction": self.compare_fraction,
        }
