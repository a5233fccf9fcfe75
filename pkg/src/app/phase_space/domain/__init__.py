from .grid import PhaseSpaceGrid, balanced_grid, make_grid
from .symbol import OperatorMatrix, Symbol, WaveFunction

__all__ = ["PhaseSpaceGrid", "make_grid", "balanced_grid", "Symbol", "OperatorMatrix", "WaveFunction"]
