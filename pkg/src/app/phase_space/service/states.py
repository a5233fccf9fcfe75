import numpy as np

from src.app.config.default_settings import DEFAULT_TOLERANCES
from src.app.phase_space.domain.grid import PhaseSpaceGrid
from src.app.phase_space.domain.symbol import Symbol, WaveFunction
from src.app.phase_space.service.weyl import weyl_symbol_of
from src.app.utils.errors import NormalizationError


def coherent_state(
    grid: PhaseSpaceGrid,
    q0: float = 0.0,
    p0: float = 0.0,
    frequency: float = 1.0,
) -> WaveFunction:
    """Oscillator coherent state centred at (q0, p0), normalized on the grid."""
    q = grid.q
    hbar = grid.hbar
    values = np.exp(-frequency * (q - q0) ** 2 / (2.0 * hbar) + 1j * p0 * (q - q0) / hbar)
    return WaveFunction(grid, values).normalize()


def harmonic_ground_state(grid: PhaseSpaceGrid, frequency: float = 1.0) -> WaveFunction:
    return coherent_state(grid, 0.0, 0.0, frequency)


def wigner_of_state(psi: WaveFunction, strict: bool = True) -> Symbol:
    """
    Wigner function W = symbol(|psi><psi|) / (2 pi hbar).

    Args:
        psi (WaveFunction): normalized state
        strict (bool): reject unnormalized input instead of normalizing it

    Returns:
        Symbol: real symbol with unit phase-space integral

    Raises:
        NormalizationError: If ``strict`` and psi is not normalized.
    """
    deviation = abs(psi.norm() - 1.0)
    if deviation > DEFAULT_TOLERANCES["normalization"]:
        if strict:
            raise NormalizationError(f"wavefunction norm deviates from 1 by {deviation:.3e}")
        psi = psi.normalize()
    grid = psi.grid
    symbol = weyl_symbol_of(psi.projector())
    return Symbol(grid, symbol.values.real / (2.0 * np.pi * grid.hbar), real_observable=True)


def phase_space_integral(symbol: Symbol) -> complex:
    return complex(np.sum(symbol.values) * symbol.grid.cell_area)
