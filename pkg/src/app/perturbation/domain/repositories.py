from abc import ABC, abstractmethod
from pathlib import Path
from typing import Optional, Sequence, Tuple

from .functional_polynomial import FunctionalPolynomial


class PolynomialRepository(ABC):
    @abstractmethod
    def save(self, polynomial: FunctionalPolynomial, path: Path, node_times: Optional[Sequence[float]] = None) -> Path:
        """Write the polynomial; returns the written path."""
        pass

    @abstractmethod
    def load(self, path: Path) -> Tuple[FunctionalPolynomial, Tuple[float, ...]]:
        """Read a polynomial and the node times it was stored with."""
        pass
