"""
Phase-space realization of functionals: q(t) -> q cos(m tau) + p sin(m tau) / m.
"""
from typing import Dict, Optional, Tuple

import numpy as np

from src.app.perturbation.domain.functional_polynomial import FunctionalPolynomial
from src.app.perturbation.domain.time_grid import TimeGrid
from src.app.phase_space.domain.grid import PhaseSpaceGrid
from src.app.phase_space.domain.symbol import Symbol


def evaluate_on_phase_space(
    polynomial: FunctionalPolynomial,
    time_grid: TimeGrid,
    grid: PhaseSpaceGrid,
    mass: float,
    reference_time: Optional[float] = None,
) -> Symbol:
    """
    Symbol of a functional with q(t_i) replaced by the interaction-picture
    position q_I(t_i) referenced to T1 and hbar taken from the grid.
    """
    reference = time_grid.start if reference_time is None else reference_time
    q, p = grid.mesh()
    tau = time_grid.times - reference
    fields = [q * np.cos(mass * s) + p * np.sin(mass * s) / mass for s in tau]
    monomials: Dict[Tuple[int, ...], np.ndarray] = {(): np.ones_like(q)}

    def monomial(insertions: Tuple[int, ...]) -> np.ndarray:
        if insertions not in monomials:
            monomials[insertions] = monomial(insertions[:-1]) * fields[insertions[-1]]
        return monomials[insertions]

    values = np.zeros(q.shape, dtype=complex)
    for (power, insertions), coefficient in polynomial:
        values += coefficient * grid.hbar ** power * monomial(insertions)
    return Symbol(grid, values)
