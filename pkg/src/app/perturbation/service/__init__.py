"""
Service layer for the functional Weyl-Moyal algebra.
"""
from .algebra import (
    ordinary_product_orders,
    star_dyson,
    star_dyson_orders,
    star_functionals,
    wick_contract,
    wick_expand,
    wick_expand_orders,
)
from .energy import EnergyTransformReport, kernel_energy_transform
from .realization import evaluate_on_phase_space

__all__ = [
    "star_functionals",
    "star_dyson",
    "star_dyson_orders",
    "wick_contract",
    "wick_expand",
    "wick_expand_orders",
    "ordinary_product_orders",
    "kernel_energy_transform",
    "EnergyTransformReport",
    "evaluate_on_phase_space",
]
