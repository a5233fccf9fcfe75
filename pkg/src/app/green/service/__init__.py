"""
Green functions of the scattering symbol by differentiating in source pulses.
"""
from .extrapolation import extrapolate, neville_tableau
from .green_functions import (
    MomentReport,
    feynman_moment_check,
    green_function,
    quadratic_green_oracle,
    quartic_shift_prediction,
)
from .green_service import GreenService

__all__ = [
    "green_function",
    "feynman_moment_check",
    "quadratic_green_oracle",
    "quartic_shift_prediction",
    "MomentReport",
    "neville_tableau",
    "extrapolate",
    "GreenService",
]
