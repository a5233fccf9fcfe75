from pathlib import Path
from typing import List, Sequence, Union

import numpy as np

from src.app.green.domain.green_request import ConvergenceRow
from src.app.utils.errors import SerializationError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)

COLUMNS = ("epsilon", "sigma", "estimate_norm", "residual")


class CsvConvergenceRepository:
    """
    Convergence tables of the (epsilon, sigma) ladder as CSV, one row per
    estimate: ``epsilon,sigma,estimate_norm,residual``.
    """

    def save(self, rows: Sequence[ConvergenceRow], path: Union[str, Path]) -> Path:
        path = Path(path)
        table = np.array([[getattr(row, c) for c in COLUMNS] for row in rows], dtype=float).reshape(-1, len(COLUMNS))
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            np.savetxt(path, table, delimiter=",", header=",".join(COLUMNS), comments="", fmt="%.17g")
        except OSError as e:
            logger.error(f"IOError writing {path}: {e}")
            raise SerializationError(f"failed to write {path}: {e}") from e
        return path

    def load(self, path: Union[str, Path]) -> List[ConvergenceRow]:
        path = Path(path)
        try:
            table = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        except (OSError, ValueError) as e:
            raise SerializationError(f"failed to read {path}: {e}") from e
        if table.size and table.shape[1] != len(COLUMNS):
            raise SerializationError(f"{path} has {table.shape[1]} columns, expected {len(COLUMNS)}")
        return [ConvergenceRow(*(float(v) for v in line)) for line in table]
