from .flow import SymplecticFlow
from .hamiltonian import ConfinementWindow, QuadraticHamiltonian
from .potential import GaussianPulse, PhaseSpacePotential, PotentialSpec, PulseTrain
from .route import ScatteringRoute

__all__ = [
    "QuadraticHamiltonian",
    "ConfinementWindow",
    "SymplecticFlow",
    "GaussianPulse",
    "PulseTrain",
    "PotentialSpec",
    "PhaseSpacePotential",
    "ScatteringRoute",
]
