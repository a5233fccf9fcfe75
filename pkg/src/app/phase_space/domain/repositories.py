from abc import ABC, abstractmethod
from pathlib import Path
from typing import Union

from .symbol import OperatorMatrix, Symbol

GridArtifact = Union[Symbol, OperatorMatrix]


class SymbolRepository(ABC):
    """
    Repository for persisting symbols and operator matrices.
    """

    @abstractmethod
    def save(self, artifact: GridArtifact, path: Union[str, Path]) -> Path:
        """
        Writes a symbol or operator matrix.

        Args:
            artifact: Symbol or OperatorMatrix to persist.
            path: Destination file.

        Returns:
            The path written.

        Raises:
            SerializationError: If the artifact cannot be written.
        """
        pass

    @abstractmethod
    def load(self, path: Union[str, Path]) -> GridArtifact:
        """
        Reads a symbol or operator matrix back, grid included.

        Raises:
            SerializationError: If the file is missing or malformed.
        """
        pass
