import numpy as np
import pytest

from src.app.dynamics.domain.hamiltonian import QuadraticHamiltonian
from src.app.phase_space.domain.grid import balanced_grid
from src.app.phase_space.domain.symbol import Symbol


@pytest.fixture
def small_grid():
    return balanced_grid(32, 1.0)


@pytest.fixture
def grid():
    return balanced_grid(64, 1.0)


@pytest.fixture
def oscillator():
    return QuadraticHamiltonian.oscillator(1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def band_limited(rng):
    """Factory of complex symbols whose Fourier modes all lie below half-Nyquist."""

    def make(grid):
        n = grid.points
        modes = np.abs(np.fft.fftfreq(n, 1.0 / n))
        inside = (modes[:, None] < n // 4) & (modes[None, :] < n // 4)
        coefficients = np.zeros((n, n), dtype=complex)
        count = int(np.count_nonzero(inside))
        coefficients[inside] = rng.standard_normal(count) + 1j * rng.standard_normal(count)
        values = np.fft.ifft2(coefficients)
        return Symbol(grid, values / np.max(np.abs(values)))

    return make
