from pathlib import Path
from typing import Union

import numpy as np

from src.app.phase_space.domain.grid import make_grid
from src.app.phase_space.domain.repositories import GridArtifact, SymbolRepository
from src.app.phase_space.domain.symbol import OperatorMatrix, Symbol
from src.app.utils.errors import SerializationError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)


class CsvSymbolRepository(SymbolRepository):
    """
    Human-readable CSV for small grids.

    First line: ``# kind=<symbol|matrix> N=<int> L=<float> hbar=<float>``;
    then rows ``row,col,real,imag`` in row-major order.
    """

    def __init__(self, max_points: int = 64):
        self.max_points = max_points

    def save(self, artifact: GridArtifact, path: Union[str, Path]) -> Path:
        path = Path(path)
        if isinstance(artifact, Symbol):
            kind, payload = "symbol", artifact.values
        elif isinstance(artifact, OperatorMatrix):
            kind, payload = "matrix", artifact.entries
        else:
            raise SerializationError(f"cannot serialize {type(artifact).__name__}")
        grid = artifact.grid
        if grid.points > self.max_points:
            raise SerializationError(f"CSV output limited to N <= {self.max_points}, got {grid.points}")
        n = grid.points
        rows, cols = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
        table = np.column_stack([rows.ravel(), cols.ravel(), payload.real.ravel(), payload.imag.ravel()])
        header = f"kind={kind} N={n} L={grid.half_extent!r} hbar={grid.hbar!r}\nrow,col,real,imag"
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            np.savetxt(path, table, delimiter=",", header=header, fmt=["%d", "%d", "%.17g", "%.17g"])
        except OSError as e:
            logger.error(f"IOError writing {path}: {e}")
            raise SerializationError(f"failed to write {path}: {e}") from e
        return path

    def load(self, path: Union[str, Path]) -> GridArtifact:
        path = Path(path)
        try:
            with open(path, "r") as f:
                first = f.readline().lstrip("#").split()
            meta = dict(item.split("=", 1) for item in first)
            grid = make_grid(float(meta["L"]), int(meta["N"]), float(meta["hbar"]))
            table = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
        except (OSError, KeyError, ValueError) as e:
            raise SerializationError(f"failed to read {path}: {e}") from e
        n = grid.points
        if table.shape != (n * n, 4):
            raise SerializationError(f"{path} holds {table.shape[0]} rows, expected {n * n}")
        payload = np.zeros((n, n), dtype=complex)
        payload[table[:, 0].astype(int), table[:, 1].astype(int)] = table[:, 2] + 1j * table[:, 3]
        if meta.get("kind") == "matrix":
            return OperatorMatrix(grid, payload)
        return Symbol(grid, payload)
