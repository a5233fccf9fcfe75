from pathlib import Path
from typing import Union

import numpy as np

from src.app.classical.domain.duffing import Trajectory
from src.app.classical.domain.lattice import LatticeField
from src.app.utils.errors import SerializationError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)


class CsvClassicalRepository:
    """
    CSV series for classical runs.

    Trajectories: ``t,q,p`` per sample (single initial condition).
    Lattice snapshots: first line ``# t=<float> a=<float>``, then ``x,phi,pi``.
    """

    def _write(self, path: Path, table: np.ndarray, header: str) -> Path:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            np.savetxt(path, table, delimiter=",", header=header, fmt="%.17g")
        except OSError as e:
            logger.error(f"IOError writing {path}: {e}")
            raise SerializationError(f"failed to write {path}: {e}") from e
        return path

    def _read(self, path: Path) -> np.ndarray:
        try:
            return np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
        except (OSError, ValueError) as e:
            raise SerializationError(f"failed to read {path}: {e}") from e

    def save_trajectory(self, trajectory: Trajectory, path: Union[str, Path]) -> Path:
        if trajectory.q.ndim != 1:
            raise SerializationError(f"CSV trajectories hold one initial condition, got batch {trajectory.q.shape[1:]}")
        table = np.column_stack([trajectory.times, trajectory.q, trajectory.p])
        return self._write(Path(path), table, "t,q,p")

    def load_trajectory(self, path: Union[str, Path]) -> Trajectory:
        table = self._read(Path(path))
        if table.shape[1] != 3:
            raise SerializationError(f"{path} has {table.shape[1]} columns, expected 3")
        return Trajectory(table[:, 0], table[:, 1], table[:, 2])

    def save_lattice(self, field: LatticeField, path: Union[str, Path]) -> Path:
        table = np.column_stack([field.positions, field.phi, field.pi])
        header = f"t={field.time!r} a={field.spacing!r}\nx,phi,pi"
        return self._write(Path(path), table, header)

    def load_lattice(self, path: Union[str, Path]) -> LatticeField:
        path = Path(path)
        try:
            with open(path, "r") as f:
                meta = dict(item.split("=", 1) for item in f.readline().lstrip("#").split())
            time, spacing = float(meta["t"]), float(meta["a"])
        except (OSError, KeyError, ValueError) as e:
            raise SerializationError(f"failed to read {path}: {e}") from e
        table = self._read(path)
        if table.shape[1] != 3:
            raise SerializationError(f"{path} has {table.shape[1]} columns, expected 3")
        return LatticeField(table[:, 1], table[:, 2], spacing, time)
