"""
Domain objects of the classical side: driven anharmonic oscillator,
lattice fields and spacelike surfaces.
"""
from .duffing import DuffingParams, Trajectory
from .functional import LatticeFunctional
from .lattice import FieldData, LagrangianSpec, LatticeField, SurfaceParameterization

__all__ = [
    "DuffingParams",
    "Trajectory",
    "LagrangianSpec",
    "LatticeField",
    "SurfaceParameterization",
    "FieldData",
    "LatticeFunctional",
]
