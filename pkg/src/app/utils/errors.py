"""
Custom exception classes for the lab.
"""


class WeylLabError(Exception):
    """Base exception class for all lab errors."""
    exit_code = 3
    error_code = "weyl_lab_error"

    def __init__(self, message=None, exit_code=None, error_code=None):
        self.message = message or self.__class__.__doc__
        self.exit_code = exit_code or self.__class__.exit_code
        self.error_code = error_code or self.__class__.error_code
        super().__init__(self.message)

    def to_dict(self) -> dict:
        return {"status": "error", "error": str(self), "error_code": self.error_code}


class GridError(WeylLabError):
    """Invalid phase-space grid parameters."""
    error_code = "grid_error"


class ShapeMismatchError(WeylLabError):
    """Arrays or grids of incompatible shape."""
    error_code = "shape_mismatch"


class BandLimitError(WeylLabError):
    """Symbol carries Fourier mass above half-Nyquist."""
    error_code = "band_limit_violation"


class SupportEscapeError(WeylLabError):
    """Transported symbol reaches the boundary of the grid box."""
    error_code = "support_escape"


class NormalizationError(WeylLabError):
    """Wavefunction is not normalized."""
    error_code = "normalization_error"


class StepResolutionError(WeylLabError):
    """Time step does not resolve the Hamiltonian."""
    error_code = "step_resolution"


class HermiticityError(WeylLabError):
    """Assembled Hamiltonian is not Hermitian."""
    error_code = "non_hermitian"


class ConvergenceError(WeylLabError):
    """Extrapolated estimates fail the Cauchy criterion."""
    error_code = "non_convergence"


class SymplecticError(WeylLabError):
    """Flow matrix is not symplectic."""
    error_code = "not_symplectic"


class PulseWindowError(WeylLabError):
    """Source pulse or envelope escapes the time window."""
    error_code = "pulse_window"


class DegreeOverflowError(WeylLabError):
    """Functional polynomial degree bound exceeded."""
    error_code = "degree_overflow"


class OrderBoundError(WeylLabError):
    """Requested perturbative orders exceed the supported caps."""
    error_code = "order_bound"


class SingularEnergyError(WeylLabError):
    """Energy grid hits the kernel singularities."""
    error_code = "singular_energy"


class SpacelikeError(WeylLabError):
    """Surface parameterization is not spacelike."""
    error_code = "not_spacelike"


class InconsistentMomentumError(WeylLabError):
    """Supplied conjugate momentum disagrees with the field data."""
    error_code = "inconsistent_momentum"


class CFLViolationError(WeylLabError):
    """Lattice time step violates the CFL condition."""
    error_code = "cfl_violation"


class LatticeMismatchError(WeylLabError):
    """Functionals sampled on different lattices."""
    error_code = "lattice_mismatch"


class WindowMismatchError(WeylLabError):
    """Trajectory does not cover the requested time window."""
    error_code = "window_mismatch"


class SerializationError(WeylLabError):
    """Error reading or writing a serialized artifact."""
    error_code = "serialization_error"


class ConfigError(WeylLabError):
    """Scenario configuration is invalid."""
    exit_code = 2
    error_code = "config_error"


class CheckFailure(WeylLabError):
    """One or more scenario checks failed."""
    exit_code = 1
    error_code = "check_failure"
