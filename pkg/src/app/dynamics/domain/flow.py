from dataclasses import dataclass

import numpy as np

from src.app.config.default_settings import DEFAULT_TOLERANCES
from src.app.utils.errors import ShapeMismatchError, SymplecticError


@dataclass(frozen=True, eq=False)
class SymplecticFlow:
    """Affine symplectic map z -> M z + d on (q, p)."""
    matrix: np.ndarray
    shift: np.ndarray = None

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=float)
        shift = np.zeros(2) if self.shift is None else np.array(self.shift, dtype=float)
        if matrix.shape != (2, 2) or shift.shape != (2,):
            raise ShapeMismatchError(f"expected M 2x2 and d 2-vector, got {matrix.shape} and {shift.shape}")
        det = float(np.linalg.det(matrix))
        if abs(det - 1.0) > DEFAULT_TOLERANCES["symplectic_det"]:
            raise SymplecticError(f"flow matrix has determinant {det!r}")
        matrix.setflags(write=False)
        shift.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "shift", shift)

    @classmethod
    def identity(cls) -> "SymplecticFlow":
        return cls(np.eye(2))

    def __call__(self, q, p):
        m, d = self.matrix, self.shift
        return m[0, 0] * q + m[0, 1] * p + d[0], m[1, 0] * q + m[1, 1] * p + d[1]

    def compose(self, inner: "SymplecticFlow") -> "SymplecticFlow":
        """self after inner."""
        return SymplecticFlow(self.matrix @ inner.matrix, self.matrix @ inner.shift + self.shift)

    def inverse(self) -> "SymplecticFlow":
        inverse = np.linalg.inv(self.matrix)
        return SymplecticFlow(inverse, -inverse @ self.shift)

    def distance(self, other: "SymplecticFlow") -> float:
        return float(max(np.max(np.abs(self.matrix - other.matrix)), np.max(np.abs(self.shift - other.shift))))

    def to_dict(self) -> dict:
        return {"M": self.matrix.tolist(), "d": self.shift.tolist()}
