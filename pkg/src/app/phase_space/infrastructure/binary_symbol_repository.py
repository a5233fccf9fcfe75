"""
Flat binary layout (all little-endian):

    offset  size  field
    0       4     magic b"WMLB"
    4       1     kind: b"S" symbol, b"M" operator matrix
    5       4     N (uint32)
    9       8     L (float64)
    17      8     hbar (float64)
    25      16*N*N  row-major complex128 pairs (real, imag)
"""
import struct
from pathlib import Path
from typing import Union

import numpy as np

from src.app.phase_space.domain.grid import make_grid
from src.app.phase_space.domain.repositories import GridArtifact, SymbolRepository
from src.app.phase_space.domain.symbol import OperatorMatrix, Symbol
from src.app.utils.errors import SerializationError, WeylLabError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)

MAGIC = b"WMLB"
HEADER = struct.Struct("<4scIdd")


class BinarySymbolRepository(SymbolRepository):
    """Symbols and matrices in the documented flat binary layout."""

    def save(self, artifact: GridArtifact, path: Union[str, Path]) -> Path:
        path = Path(path)
        if isinstance(artifact, Symbol):
            kind, payload = b"S", artifact.values
        elif isinstance(artifact, OperatorMatrix):
            kind, payload = b"M", artifact.entries
        else:
            raise SerializationError(f"cannot serialize {type(artifact).__name__}")
        grid = artifact.grid
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "wb") as f:
                f.write(HEADER.pack(MAGIC, kind, grid.points, grid.half_extent, grid.hbar))
                f.write(np.ascontiguousarray(payload, dtype="<c16").tobytes(order="C"))
        except OSError as e:
            logger.error(f"IOError writing {path}: {e}")
            raise SerializationError(f"failed to write {path}: {e}") from e
        logger.debug(f"Wrote {kind.decode()} artifact N={grid.points} to {path}")
        return path

    def load(self, path: Union[str, Path]) -> GridArtifact:
        path = Path(path)
        try:
            raw = path.read_bytes()
        except OSError as e:
            raise SerializationError(f"failed to read {path}: {e}") from e
        if len(raw) < HEADER.size:
            raise SerializationError(f"{path} is too short for a header")
        magic, kind, n, half_extent, hbar = HEADER.unpack_from(raw)
        if magic != MAGIC:
            raise SerializationError(f"{path} has bad magic {magic!r}")
        expected = HEADER.size + 16 * n * n
        if len(raw) != expected:
            raise SerializationError(f"{path} holds {len(raw)} bytes, expected {expected}")
        try:
            grid = make_grid(half_extent, n, hbar)
        except WeylLabError as e:
            raise SerializationError(f"{path} carries an invalid grid: {e}") from e
        payload = np.frombuffer(raw, dtype="<c16", offset=HEADER.size).reshape(n, n)
        if kind == b"S":
            return Symbol(grid, payload)
        if kind == b"M":
            return OperatorMatrix(grid, payload)
        raise SerializationError(f"{path} has unknown kind {kind!r}")
