from dataclasses import dataclass

import numpy as np

from src.app.utils.errors import GridError, LatticeMismatchError


@dataclass(frozen=True, eq=False)
class LatticeFunctional:
    """
    Value of a functional F(phi, pi) on a lattice field together with its
    discrete variational derivatives dF/dphi(s) = (1/a) dF/dphi_s.
    """
    value: float
    d_phi: np.ndarray
    d_pi: np.ndarray
    spacing: float

    def __post_init__(self):
        d_phi = np.asarray(self.d_phi, dtype=float)
        d_pi = np.asarray(self.d_pi, dtype=float)
        if d_phi.ndim != 1 or d_phi.shape != d_pi.shape:
            raise LatticeMismatchError(f"variational derivatives of shape {d_phi.shape} and {d_pi.shape}")
        if not self.spacing > 0:
            raise GridError(f"lattice spacing must be positive, got {self.spacing}")
        object.__setattr__(self, "value", float(self.value))
        object.__setattr__(self, "d_phi", d_phi)
        object.__setattr__(self, "d_pi", d_pi)

    @property
    def sites(self) -> int:
        return self.d_phi.size

    def require_same_lattice(self, other: "LatticeFunctional") -> None:
        if self.sites != other.sites or not np.isclose(self.spacing, other.spacing, rtol=1e-14, atol=0.0):
            raise LatticeMismatchError(
                f"functionals sampled on {self.sites} sites at a={self.spacing} "
                f"and {other.sites} sites at a={other.spacing}"
            )
