"""
Moyal star product, Moyal bracket and Poisson bracket on grid symbols.
"""
from functools import lru_cache
from math import comb, factorial
from typing import Mapping, Optional

import numpy as np

from src.app.config.core import resolve_tolerances
from src.app.moyal.domain.star_method import (
    SPECTRAL,
    BandLimitPolicy,
    DerivativeBasis,
    StarMethod,
    StarVariant,
)
from src.app.moyal.service.derivatives import derivative_table
from src.app.phase_space.domain.symbol import Symbol, require_same_grid
from src.app.phase_space.service.weyl import band_limit_excess
from src.app.utils.errors import BandLimitError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)


def check_band_limit(
    symbol: Symbol,
    policy: BandLimitPolicy = BandLimitPolicy.WARN,
    tolerances: Optional[Mapping[str, float]] = None,
    label: str = "symbol",
) -> float:
    """
    Fourier mass above half-Nyquist, handled per ``policy``.

    Raises:
        BandLimitError: If the policy is strict and the mass exceeds the tolerance.
    """
    if policy == BandLimitPolicy.IGNORE:
        return 0.0
    tolerance = resolve_tolerances(tolerances)["band_limit"]
    excess = band_limit_excess(symbol)
    if excess > tolerance:
        message = f"{label} carries {excess:.3e} relative Fourier mass above half-Nyquist"
        if policy == BandLimitPolicy.STRICT:
            raise BandLimitError(message)
        logger.warning(message)
    return excess


def _series_star(f: Symbol, g: Symbol, method: StarMethod) -> np.ndarray:
    order = method.order
    df = derivative_table(f, order, method.derivatives, method.polynomial_degree)
    dg = derivative_table(g, order, method.derivatives, method.polynomial_degree)
    half = 0.5j * f.grid.hbar
    result = np.asarray(f.values) * np.asarray(g.values)
    for k in range(1, order + 1):
        term = np.zeros_like(result)
        for j in range(k + 1):
            term = term + comb(k, j) * (-1) ** j * df[(k - j, j)] * dg[(j, k - j)]
        result = result + half ** k / factorial(k) * term
    return result


@lru_cache(maxsize=8)
def _twist_plan(n: int):
    """Mode signs, doubled-grid gather indices and the fold of output modes for N points."""
    modes = np.rint(np.fft.fftfreq(n, d=1.0 / n)).astype(int)
    sign = np.where(modes % 2 == 0, 1.0, -1.0)
    partner = np.arange(-(n // 2), n // 2 + 1)
    sites = 2 * np.arange(n)
    # doubled-grid index 2i - n2 for every partner mode n2 (rows) and site i (columns)
    left_rows = (sites[None, :] - partner[:, None]) % (2 * n)
    out_modes = np.arange(-n, n + 1)
    fold = out_modes % n
    fold_sign = np.where(out_modes % 2 == 0, 1.0, -1.0)
    for array in (modes, sign, partner, left_rows, fold, fold_sign):
        array.setflags(write=False)
    return modes, sign, partner, sites, left_rows, fold, fold_sign


def _mixed_components(values: np.ndarray) -> np.ndarray:
    """
    Components F_n(q) of f(q, p) = sum_n F_n(q) exp(i beta_n p / hbar), sampled
    on the doubled position grid q_j = -L + j dq / 2, for n in [-N/2, N/2].

    Nyquist terms are split evenly between their two representatives in both
    directions, so the result is the trigonometric interpolant of the samples.
    """
    n = values.shape[0]
    half = n // 2
    modes, sign, _, _, _, _, _ = _twist_plan(n)
    components = np.fft.fft(values, axis=1) / n * sign[None, :]
    split = np.zeros((n, n + 1), dtype=complex)
    split[:, modes + half] = components
    split[:, 0] *= 0.5
    split[:, n] = split[:, 0]

    spectrum = np.fft.fft(split, axis=0) / n
    padded = np.zeros((2 * n, n + 1), dtype=complex)
    padded[:half] = spectrum[:half]
    padded[2 * n - half + 1:] = spectrum[half + 1:]
    padded[half] = padded[2 * n - half] = 0.5 * spectrum[half]
    return np.fft.ifft(padded, axis=0) * (2 * n)


def _twisted_product(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """
    Moyal product in the mixed (q, beta) representation,
    H_n(q) = sum_{n1 + n2 = n} F_n1(q - beta_n2 / 2) G_n2(q + beta_n1 / 2),
    with the half-step shifts read off the doubled grid. The grid values are
    exact samples of the product of the factors' interpolants; output modes
    beyond Nyquist fold back onto the grid.
    """
    n = f.shape[0]
    half = n // 2
    _, _, partner, sites, left_rows, fold, fold_sign = _twist_plan(n)
    left = _mixed_components(f).T.copy()
    right = _mixed_components(g)
    combined = np.zeros((2 * n + 1, n), dtype=complex)
    for column, n1 in enumerate(partner):
        shifted_left = left[column][left_rows]
        shifted_right = right[(sites + n1) % (2 * n)].T
        combined[column:column + n + 1] += shifted_left * shifted_right
    folded = np.zeros((n, n), dtype=complex)
    np.add.at(folded, fold, combined * fold_sign[:, None])
    return np.fft.ifft(folded.T, axis=1) * n


def star(
    f: Symbol,
    g: Symbol,
    method: StarMethod = SPECTRAL,
    band_limit: BandLimitPolicy = BandLimitPolicy.WARN,
    tolerances: Optional[Mapping[str, float]] = None,
) -> Symbol:
    """
    Moyal product f * g.

    The spectral variant is the twisted convolution of the Fourier modes,
    evaluated with FFTs in the mixed position/shift representation. It samples
    the exact product of the factors' trigonometric interpolants, so for
    factors below half-Nyquist it is exact and associative and agrees with the
    grid operator product. The series variant sums
    exp((i hbar / 2)(d_q1 d_p2 - d_p1 d_q2)) to order K.

    Args:
        f (Symbol): left factor
        g (Symbol): right factor
        method (StarMethod): realization of the product
        band_limit (BandLimitPolicy): reaction to factors outside the band-limited domain
        tolerances (Optional[Mapping[str, float]]): overrides of the default table

    Returns:
        Symbol: product on the common grid

    Raises:
        ShapeMismatchError: On differing grids.
        BandLimitError: Under the strict policy for non band-limited factors.
    """
    grid = require_same_grid(f.grid, g.grid)
    if method.variant == StarVariant.SERIES:
        return Symbol(grid, _series_star(f, g, method))
    check_band_limit(f, band_limit, tolerances, "left factor")
    check_band_limit(g, band_limit, tolerances, "right factor")
    return Symbol(grid, _twisted_product(np.asarray(f.values), np.asarray(g.values)))


def moyal_bracket(
    f: Symbol,
    g: Symbol,
    method: StarMethod = SPECTRAL,
    band_limit: BandLimitPolicy = BandLimitPolicy.WARN,
    tolerances: Optional[Mapping[str, float]] = None,
) -> Symbol:
    """(f * g - g * f) / (i hbar)."""
    forward = star(f, g, method, band_limit, tolerances)
    backward = star(g, f, method, band_limit, tolerances)
    return Symbol(forward.grid, (forward.values - backward.values) / (1j * f.grid.hbar))


def poisson_bracket(
    f: Symbol,
    g: Symbol,
    derivatives: DerivativeBasis = DerivativeBasis.AUTO,
    degree: int = 6,
) -> Symbol:
    """{f, g} = df/dq dg/dp - df/dp dg/dq."""
    grid = require_same_grid(f.grid, g.grid)
    df = derivative_table(f, 1, derivatives, degree)
    dg = derivative_table(g, 1, derivatives, degree)
    return Symbol(grid, df[(1, 0)] * dg[(0, 1)] - df[(0, 1)] * dg[(1, 0)])


def unitarity_defect(
    s: Symbol,
    mask: Optional[np.ndarray] = None,
    band_limit: BandLimitPolicy = BandLimitPolicy.WARN,
    tolerances: Optional[Mapping[str, float]] = None,
) -> float:
    """
    sup |S * conj(S) - 1| with the spectral product.

    Args:
        s (Symbol): candidate scattering symbol
        mask (Optional[np.ndarray]): restrict the sup norm to these grid points
    """
    product = star(s, s.conj(), SPECTRAL, band_limit, tolerances)
    return (product - 1.0).sup_norm(mask)
