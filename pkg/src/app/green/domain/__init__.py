"""
Domain objects for Green functions from source differentiation.
"""
from .green_request import ConvergenceRow, GreenRequest, GreenResult
from .source_pulse import SourcePulse

__all__ = ["GreenRequest", "GreenResult", "ConvergenceRow", "SourcePulse"]
