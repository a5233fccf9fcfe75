"""
Free classical flow of a quadratic Hamiltonian and transport of symbols along it.
"""
from typing import Mapping, Optional

import numpy as np
from scipy.linalg import expm

from src.app.config.core import resolve_tolerances
from src.app.dynamics.domain.flow import SymplecticFlow
from src.app.dynamics.domain.hamiltonian import QuadraticHamiltonian
from src.app.phase_space.domain.symbol import Symbol
from src.app.phase_space.service.weyl import boundary_mass
from src.app.utils.errors import SupportEscapeError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)

SYMPLECTIC_J = np.array([[0.0, 1.0], [-1.0, 0.0]])


def free_flow(hamiltonian: QuadraticHamiltonian, t: float) -> SymplecticFlow:
    """
    Time-t map of Hamilton's equations dz/dt = J (A z + b).

    Forward convention: q' = dH/dp, p' = -dH/dq, so the oscillator
    (p^2 + q^2)/2 sends (q, p) to (q cos t + p sin t, -q sin t + p cos t).
    """
    generator = np.zeros((3, 3))
    generator[:2, :2] = SYMPLECTIC_J @ hamiltonian.matrix
    generator[:2, 2] = SYMPLECTIC_J @ hamiltonian.linear
    propagator = expm(generator * t)
    return SymplecticFlow(propagator[:2, :2], propagator[:2, 2])


def _interpolate_at(symbol: Symbol, q: np.ndarray, p: np.ndarray) -> np.ndarray:
    """Evaluate the periodic trigonometric interpolant of the symbol at (q, p)."""
    grid = symbol.grid
    n = grid.points
    modes = np.fft.fftfreq(n, d=1.0 / n)
    coefficients = np.fft.fft2(symbol.values) / (n * n)
    # phase of the grid origin (-L, -P)
    kq = np.pi * modes / grid.half_extent
    kp = np.pi * modes / grid.momentum_extent
    dq = (q + grid.half_extent).ravel()
    dp = (p + grid.momentum_extent).ravel()
    p_waves = np.exp(1j * np.outer(dp, kp))
    result = np.zeros(dq.shape, dtype=complex)
    for m in range(n):
        result += np.exp(1j * kq[m] * dq) * (p_waves @ coefficients[m])
    return result.reshape(q.shape)


def transport_symbol(
    symbol: Symbol,
    flow: SymplecticFlow,
    strict: bool = True,
    tolerances: Optional[Mapping[str, float]] = None,
) -> Symbol:
    """
    Composition symbol o flow.

    With flow = free_flow(H0, t) this is the Heisenberg evolution
    symbol(U0(t)^dagger A U0(t)). Symbols with an analytic generator are
    composed exactly; sampled symbols through their trigonometric interpolant.

    Args:
        symbol (Symbol): observable to transport
        flow (SymplecticFlow): affine symplectic map
        strict (bool): raise on support escape instead of warning

    Returns:
        Symbol: transported observable, generator composed when available

    Raises:
        SupportEscapeError: If the transported symbol carries mass in the boundary band.
    """
    tolerances = resolve_tolerances(tolerances)
    grid = symbol.grid
    q, p = grid.mesh()
    q_new, p_new = flow(q, p)
    confined = boundary_mass(symbol) <= tolerances["support_escape"]
    if symbol.generator is not None:
        source = symbol.generator
        generator = lambda a, b: source(*flow(a, b))  # noqa: E731
        values = np.broadcast_to(np.asarray(source(q_new, p_new), dtype=complex), q.shape)
        if symbol.real_observable:
            values = values.real
        result = Symbol(grid, values, symbol.real_observable, generator)
    else:
        if not confined:
            _escape(f"sampled symbol already reaches the boundary band (mass {boundary_mass(symbol):.3e})", strict)
        values = _interpolate_at(symbol, q_new, p_new)
        if symbol.real_observable:
            values = values.real
        result = Symbol(grid, values, symbol.real_observable)
    # unconfined analytic symbols (q, p, ...) have no support to lose
    if confined:
        mass = boundary_mass(result)
        if mass > tolerances["support_escape"]:
            _escape(f"transported symbol carries boundary mass {mass:.3e}", strict)
    return result


def _escape(message: str, strict: bool) -> None:
    if strict:
        raise SupportEscapeError(message)
    logger.warning(message)
