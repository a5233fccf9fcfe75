from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np

from src.app.utils.errors import GridError, LatticeMismatchError, ShapeMismatchError, SpacelikeError

# g(x0, x1) on broadcastable arrays
CouplingEnvelope = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class LagrangianSpec:
    """
    L = 1/2 (phi_x0^2 - phi_x1^2 - m^2 phi^2) - g(x) phi^4 / 4!.

    Attributes:
        mass (float): m > 0
        coupling (Optional[CouplingEnvelope]): g(x0, x1); None is the free theory
    """
    mass: float = 1.0
    coupling: Optional[CouplingEnvelope] = None

    def __post_init__(self):
        if not self.mass > 0:
            raise GridError(f"mass must be positive, got {self.mass}")

    def coupling_at(self, x0, x1) -> np.ndarray:
        x0, x1 = np.broadcast_arrays(np.asarray(x0, dtype=float), np.asarray(x1, dtype=float))
        if self.coupling is None:
            return np.zeros(x0.shape)
        return np.asarray(self.coupling(x0, x1), dtype=float) * np.ones(x0.shape)

    def density(self, phi, phi_x0, phi_x1, x0=0.0, x1=0.0) -> np.ndarray:
        g = self.coupling_at(x0, x1)
        return 0.5 * (phi_x0 ** 2 - phi_x1 ** 2 - self.mass ** 2 * phi ** 2) - g * phi ** 4 / 24.0


@dataclass(frozen=True, eq=False)
class LatticeField:
    """
    Periodic lattice x_n = n a, n = 0..N_x - 1, carrying phi and its momentum pi at time t.
    """
    phi: np.ndarray
    pi: np.ndarray
    spacing: float
    time: float = 0.0

    def __post_init__(self):
        phi = np.array(self.phi, dtype=float)
        pi = np.array(self.pi, dtype=float)
        if phi.ndim != 1 or phi.shape != pi.shape:
            raise ShapeMismatchError(f"phi {phi.shape} and pi {pi.shape} must be equal 1D arrays")
        if not self.spacing > 0:
            raise GridError(f"lattice spacing must be positive, got {self.spacing}")
        if not (np.all(np.isfinite(phi)) and np.all(np.isfinite(pi))):
            raise GridError("lattice field carries non-finite values")
        phi.setflags(write=False)
        pi.setflags(write=False)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "pi", pi)

    @classmethod
    def zeros(cls, sites: int, spacing: float) -> "LatticeField":
        return cls(np.zeros(sites), np.zeros(sites), spacing)

    @property
    def sites(self) -> int:
        return self.phi.size

    @property
    def positions(self) -> np.ndarray:
        return self.spacing * np.arange(self.sites)

    @property
    def length(self) -> float:
        return self.spacing * self.sites

    def wavenumber(self, mode: int) -> float:
        """k = 2 pi n / (N_x a)."""
        return 2.0 * np.pi * mode / self.length

    def forward_difference(self) -> np.ndarray:
        return (np.roll(self.phi, -1) - self.phi) / self.spacing

    def laplacian(self, values: Optional[np.ndarray] = None) -> np.ndarray:
        values = self.phi if values is None else values
        return (np.roll(values, -1) - 2.0 * values + np.roll(values, 1)) / self.spacing ** 2

    def require_same_lattice(self, other: "LatticeField") -> None:
        if self.sites != other.sites or not np.isclose(self.spacing, other.spacing, rtol=1e-14, atol=0.0):
            raise LatticeMismatchError(
                f"lattices differ: {self.sites} sites at a={self.spacing} and {other.sites} sites at a={other.spacing}"
            )

    def evolved(self, phi: np.ndarray, pi: np.ndarray, time: float) -> "LatticeField":
        return replace(self, phi=phi, pi=pi, time=time)


@dataclass(frozen=True, eq=False)
class SurfaceParameterization:
    """
    Curve s -> (x0(s), x1(s)) in 1+1 spacetime.

    Derivatives default to second-order central differences (exact for
    straight surfaces); analytic ones may be supplied.
    """
    s: np.ndarray
    x0: np.ndarray
    x1: np.ndarray
    x0_s: Optional[np.ndarray] = field(default=None, repr=False)
    x1_s: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        s = np.asarray(self.s, dtype=float)
        x0 = np.broadcast_to(np.asarray(self.x0, dtype=float), s.shape)
        x1 = np.broadcast_to(np.asarray(self.x1, dtype=float), s.shape)
        if s.ndim != 1 or s.size < 3:
            raise ShapeMismatchError(f"surface needs at least 3 parameter nodes, got shape {s.shape}")
        x0_s = np.gradient(x0, s, edge_order=2) if self.x0_s is None else np.broadcast_to(self.x0_s, s.shape)
        x1_s = np.gradient(x1, s, edge_order=2) if self.x1_s is None else np.broadcast_to(self.x1_s, s.shape)
        for name, value in (("s", s), ("x0", x0), ("x1", x1), ("x0_s", x0_s), ("x1_s", x1_s)):
            object.__setattr__(self, name, np.asarray(value, dtype=float))
        timelike = np.abs(self.x0_s) >= np.abs(self.x1_s)
        if np.any(timelike):
            node = int(np.argmax(timelike))
            raise SpacelikeError(
                f"surface is not spacelike at s={s[node]:.4f}: |dx0/ds|={abs(self.x0_s[node]):.4g} "
                f">= |dx1/ds|={abs(self.x1_s[node]):.4g}"
            )

    @classmethod
    def flat(cls, s: np.ndarray, time: float = 0.0) -> "SurfaceParameterization":
        """x0 = time, x1 = s."""
        s = np.asarray(s, dtype=float)
        return cls(s, np.full(s.shape, time), s, np.zeros(s.shape), np.ones(s.shape))

    @classmethod
    def tilted(cls, s: np.ndarray, slope: float, time: float = 0.0) -> "SurfaceParameterization":
        """x0 = time + slope s, x1 = s; spacelike for |slope| < 1."""
        s = np.asarray(s, dtype=float)
        return cls(s, time + slope * s, s, np.full(s.shape, slope), np.ones(s.shape))


@dataclass(frozen=True, eq=False)
class FieldData:
    """phi(s) with its spacetime gradient (phi_x0, phi_x1) sampled along a surface."""
    phi: np.ndarray
    phi_x0: np.ndarray
    phi_x1: np.ndarray

    def __post_init__(self):
        arrays = [np.asarray(getattr(self, name), dtype=float) for name in ("phi", "phi_x0", "phi_x1")]
        shape = np.broadcast_shapes(*(a.shape for a in arrays))
        for name, value in zip(("phi", "phi_x0", "phi_x1"), arrays):
            object.__setattr__(self, name, np.broadcast_to(value, shape).copy())

    def along(self, surface: SurfaceParameterization) -> np.ndarray:
        """phi_s = phi_x0 x0_s + phi_x1 x1_s."""
        return self.phi_x0 * surface.x0_s + self.phi_x1 * surface.x1_s

    def require_on(self, surface: SurfaceParameterization) -> None:
        if self.phi.shape != surface.s.shape:
            raise ShapeMismatchError(f"field samples {self.phi.shape} do not match surface nodes {surface.s.shape}")
