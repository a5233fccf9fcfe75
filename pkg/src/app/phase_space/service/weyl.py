"""
Weyl correspondence between grid symbols and grid operators.

A symbol's Fourier mode exp(i(alpha_m q + beta_n p)/hbar), alpha_m = m dp and
beta_n = n dq, is mapped to exp(i pi m n / N) D(m) T(n), where D(m) is the
diagonal phase exp(i pi m q / L) and T(n) the cyclic shift (T psi)(q) = psi(q + n dq).
The phase exp(i pi m n / N) places the kernel at the half-integer midpoints
q +/- y/2 of the doubled y grid. The Nyquist class -N/2 == N/2 is split
symmetrically between its two representatives, so there the phase becomes
cos(pi n / 2), and cos(pi N / 4) on the corner. Real symbols then map to
Hermitian matrices and Hermitian matrices to real symbols, for any input.
Round trips are exact except on Nyquist modes with an odd partner index, which
the map projects out; symbols below half-Nyquist never carry them.
"""
from functools import lru_cache
from typing import Optional

import numpy as np

from src.app.config.default_settings import DEFAULT_TOLERANCES
from src.app.phase_space.domain.grid import PhaseSpaceGrid
from src.app.phase_space.domain.symbol import (
    OperatorMatrix,
    Symbol,
    SymbolGenerator,
)
from src.app.utils.errors import ShapeMismatchError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)


@lru_cache(maxsize=16)
def _transform_plan(n: int):
    """Index and phase tables for an N-point grid (read-only, shared)."""
    modes = np.rint(np.fft.fftfreq(n, d=1.0 / n)).astype(int)
    sign = np.where(modes % 2 == 0, 1.0, -1.0)
    midpoint_phase = np.exp(1j * np.pi * np.outer(modes, modes) / n)
    # mean over the representatives +/- N/2; cos(pi k / 2) exactly
    split = np.where(modes % 2 == 0, np.where(modes % 4 == 0, 1.0, -1.0), 0.0)
    nyquist = n // 2
    midpoint_phase[nyquist, :] = split
    midpoint_phase[:, nyquist] = split
    midpoint_phase[nyquist, nyquist] = split[nyquist] if n % 4 == 0 else 0.0
    rows = np.arange(n)[:, None]
    cols = (rows + modes[None, :]) % n
    for array in (modes, sign, midpoint_phase, cols):
        array.setflags(write=False)
    return modes, sign, midpoint_phase, rows, cols


def weyl_quantize(symbol: Symbol) -> OperatorMatrix:
    """
    Weyl quantization of a grid symbol.

    Args:
        symbol (Symbol): symbol on a valid grid

    Returns:
        OperatorMatrix: operator whose Weyl symbol is ``symbol``
    """
    n = symbol.grid.points
    _, sign, midpoint_phase, rows, cols = _transform_plan(n)
    spectrum = np.fft.fft2(symbol.values) / (n * n)
    diagonals = n * np.fft.ifft(spectrum * sign[None, :] * midpoint_phase, axis=0)
    entries = np.zeros((n, n), dtype=complex)
    entries[rows, cols] = diagonals
    return OperatorMatrix(symbol.grid, entries)


def weyl_symbol_of(
    operator: OperatorMatrix,
    grid: Optional[PhaseSpaceGrid] = None,
    real_observable: bool = False,
) -> Symbol:
    """
    Weyl symbol of a grid operator, A(q, p) = sum_y exp(-i p y / hbar) <q + y/2|M|q - y/2>.

    Args:
        operator (OperatorMatrix): grid operator
        grid (Optional[PhaseSpaceGrid]): grid the caller expects the operator on
        real_observable (bool): flag the result as real (imaginary part dropped after the check)

    Returns:
        Symbol: symbol on the operator's grid

    Raises:
        ShapeMismatchError: If ``grid`` differs from the operator's grid.
    """
    if grid is not None and not grid.matches(operator.grid):
        raise ShapeMismatchError(
            f"operator lives on {operator.grid.to_dict()}, expected {grid.to_dict()}"
        )
    n = operator.grid.points
    _, sign, midpoint_phase, rows, cols = _transform_plan(n)
    diagonals = np.asarray(operator.entries)[rows, cols]
    spectrum = np.fft.fft(diagonals, axis=0) / n
    values = np.fft.ifft2(spectrum * sign[None, :] * np.conj(midpoint_phase) * (n * n))
    if real_observable:
        imag = float(np.max(np.abs(values.imag)))
        if imag > DEFAULT_TOLERANCES["real_symbol_imag"]:
            logger.warning(f"Symbol flagged real carries imaginary part {imag:.3e}; keeping complex values.")
            return Symbol(operator.grid, values)
        values = values.real
    return Symbol(operator.grid, values, real_observable=real_observable)


def symbol_from_function(
    grid: PhaseSpaceGrid,
    function: SymbolGenerator,
    real_observable: bool = False,
) -> Symbol:
    """Sample ``function(q, p)`` on the grid and keep it as the symbol's generator."""
    q, p = grid.mesh()
    values = np.broadcast_to(np.asarray(function(q, p), dtype=complex), q.shape)
    if real_observable:
        values = values.real
    return Symbol(grid, values, real_observable=real_observable, generator=function)


def constant_symbol(grid: PhaseSpaceGrid, value: complex = 1.0) -> Symbol:
    return symbol_from_function(grid, lambda q, p: np.full(np.broadcast(q, p).shape, value, dtype=complex))


def position_operator(grid: PhaseSpaceGrid, power: int = 1) -> OperatorMatrix:
    """Diagonal multiplication by q**power."""
    return OperatorMatrix(grid, np.diag(grid.q.astype(complex) ** power))


def momentum_operator(grid: PhaseSpaceGrid, power: int = 1) -> OperatorMatrix:
    """Spectral momentum operator: diagonal in the plane waves exp(i p_k q / hbar)."""
    plane_waves = np.exp(1j * np.outer(grid.q, grid.p) / grid.hbar) / np.sqrt(grid.points)
    entries = (plane_waves * grid.p[None, :] ** power) @ plane_waves.conj().T
    return OperatorMatrix(grid, entries)


def band_limit_excess(symbol: Symbol) -> float:
    """Relative L2 Fourier mass of the symbol at or above half-Nyquist."""
    n = symbol.grid.points
    modes = np.abs(_transform_plan(n)[0])
    spectrum = np.abs(np.fft.fft2(symbol.values)) ** 2
    total = float(np.sum(spectrum))
    if total == 0.0:
        return 0.0
    high = (modes[:, None] >= n // 4) | (modes[None, :] >= n // 4)
    return float(np.sqrt(np.sum(spectrum[high]) / total))


def boundary_band(grid: PhaseSpaceGrid, fraction: Optional[float] = None) -> np.ndarray:
    """Boolean mask of the outer ``fraction`` of the box along either axis."""
    fraction = DEFAULT_TOLERANCES["boundary_band_fraction"] if fraction is None else fraction
    q, p = grid.mesh()
    return (np.abs(q) >= (1.0 - fraction) * grid.half_extent) | (
        np.abs(p) >= (1.0 - fraction) * grid.momentum_extent
    )


def boundary_mass(symbol: Symbol, fraction: Optional[float] = None) -> float:
    """
    Relative L2 mass of (A - baseline) inside the boundary band, where the
    baseline is the band mean. Constant far fields therefore carry no mass.
    """
    band = boundary_band(symbol.grid, fraction)
    baseline = np.mean(symbol.values[band])
    deviation = np.abs(symbol.values - baseline) ** 2
    total = float(np.sum(deviation))
    if total == 0.0:
        return 0.0
    return float(np.sum(deviation[band]) / total)


def interior_mask(grid: PhaseSpaceGrid, radius: float) -> np.ndarray:
    """Points with q^2 + p^2 <= radius^2."""
    q, p = grid.mesh()
    return q ** 2 + p ** 2 <= radius ** 2
