"""
Service layer for the phase-space domain.
"""
from .states import coherent_state, harmonic_ground_state, phase_space_integral, wigner_of_state
from .weyl import (
    band_limit_excess,
    boundary_mass,
    constant_symbol,
    interior_mask,
    momentum_operator,
    position_operator,
    symbol_from_function,
    weyl_quantize,
    weyl_symbol_of,
)

__all__ = [
    "weyl_quantize",
    "weyl_symbol_of",
    "symbol_from_function",
    "constant_symbol",
    "position_operator",
    "momentum_operator",
    "band_limit_excess",
    "boundary_mass",
    "interior_mask",
    "coherent_state",
    "harmonic_ground_state",
    "wigner_of_state",
    "phase_space_integral",
]
