"""
Phase-space derivatives of grid symbols.

Band-limited symbols are differentiated spectrally. Polynomial symbols (q, p,
quadratic Hamiltonians) are not periodic on the grid box, so they are fitted
by a two-dimensional Legendre series and differentiated exactly.
"""
from typing import Dict, Optional, Tuple

import numpy as np
from numpy.polynomial import legendre

from src.app.config.default_settings import DEFAULT_TOLERANCES
from src.app.moyal.domain.star_method import DerivativeBasis
from src.app.phase_space.domain.grid import PhaseSpaceGrid
from src.app.phase_space.domain.symbol import Symbol
from src.app.utils.errors import DegreeOverflowError

DerivativeTable = Dict[Tuple[int, int], np.ndarray]


def _wavenumbers(grid: PhaseSpaceGrid):
    n = grid.points
    kq = 2.0 * np.pi * np.fft.fftfreq(n, d=grid.dq)
    kp = 2.0 * np.pi * np.fft.fftfreq(n, d=grid.dp)
    # Nyquist column has no symmetric partner
    kq[n // 2] = 0.0
    kp[n // 2] = 0.0
    return kq, kp


def fourier_derivatives(symbol: Symbol, max_order: int) -> DerivativeTable:
    """All d^a/dq^a d^b/dp^b with a + b <= max_order, by spectral differentiation."""
    kq, kp = _wavenumbers(symbol.grid)
    spectrum = np.fft.fft2(symbol.values)
    table = {}
    for a in range(max_order + 1):
        for b in range(max_order + 1 - a):
            if a == 0 and b == 0:
                table[(0, 0)] = np.asarray(symbol.values)
                continue
            factor = np.outer((1j * kq) ** a, (1j * kp) ** b)
            table[(a, b)] = np.fft.ifft2(spectrum * factor)
    return table


def _scaled_axes(grid: PhaseSpaceGrid):
    return grid.q / grid.half_extent, grid.p / grid.momentum_extent


def legendre_fit(symbol: Symbol, degree: int) -> Tuple[np.ndarray, float]:
    """
    Least-squares Legendre coefficients of the symbol in scaled variables.

    Returns:
        Tuple[np.ndarray, float]: coefficient array (degree+1, degree+1) and
        the relative sup-norm residual of the fit
    """
    x, y = _scaled_axes(symbol.grid)
    xx, yy = np.meshgrid(x, y, indexing="ij")
    vander = legendre.legvander2d(xx.ravel(), yy.ravel(), [degree, degree])
    values = np.asarray(symbol.values).ravel()
    coefficients, *_ = np.linalg.lstsq(vander, values, rcond=None)
    residual = float(np.max(np.abs(vander @ coefficients - values)))
    scale = max(float(np.max(np.abs(values))), 1.0)
    return coefficients.reshape(degree + 1, degree + 1), residual / scale


def polynomial_derivatives(
    symbol: Symbol,
    max_order: int,
    degree: int,
    coefficients: Optional[np.ndarray] = None,
) -> DerivativeTable:
    """
    Exact derivatives of a polynomial symbol.

    Raises:
        DegreeOverflowError: If the symbol is not a polynomial of the given degree.
    """
    if coefficients is None:
        coefficients, residual = legendre_fit(symbol, degree)
        if residual > DEFAULT_TOLERANCES["polynomial_fit"]:
            raise DegreeOverflowError(
                f"symbol is not a polynomial of per-axis degree {degree} (fit residual {residual:.3e})"
            )
    grid = symbol.grid
    x, y = _scaled_axes(grid)
    table = {}
    for a in range(max_order + 1):
        for b in range(max_order + 1 - a):
            if a == 0 and b == 0:
                table[(0, 0)] = np.asarray(symbol.values)
                continue
            c = legendre.legder(coefficients, m=a, scl=1.0 / grid.half_extent, axis=0) if a else coefficients
            c = legendre.legder(c, m=b, scl=1.0 / grid.momentum_extent, axis=1) if b else c
            if c.size == 0:
                table[(a, b)] = np.zeros((grid.points, grid.points), dtype=complex)
            else:
                table[(a, b)] = legendre.leggrid2d(x, y, c).astype(complex)
    return table


def derivative_table(
    symbol: Symbol,
    max_order: int,
    basis: DerivativeBasis = DerivativeBasis.AUTO,
    degree: int = 6,
) -> DerivativeTable:
    if basis == DerivativeBasis.FOURIER:
        return fourier_derivatives(symbol, max_order)
    if basis == DerivativeBasis.POLYNOMIAL:
        return polynomial_derivatives(symbol, max_order, degree)
    coefficients, residual = legendre_fit(symbol, degree)
    if residual <= DEFAULT_TOLERANCES["polynomial_fit"]:
        return polynomial_derivatives(symbol, max_order, degree, coefficients)
    return fourier_derivatives(symbol, max_order)
