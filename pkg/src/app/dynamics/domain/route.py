from enum import Enum


class ScatteringRoute(str, Enum):
    """Which integrator produces the scattering symbol."""
    HILBERT = "hilbert"
    STAR = "star"
