from dataclasses import dataclass
from enum import Enum

from src.app.utils.errors import OrderBoundError


class StarVariant(str, Enum):
    SPECTRAL = "spectral-integral"
    SERIES = "derivative-series"


class DerivativeBasis(str, Enum):
    """How the series variant differentiates a symbol."""
    FOURIER = "fourier"
    POLYNOMIAL = "polynomial"
    # polynomial when a Legendre fit of ``polynomial_degree`` reproduces the samples, else fourier
    AUTO = "auto"


class BandLimitPolicy(str, Enum):
    IGNORE = "ignore"
    WARN = "warn"
    STRICT = "strict"


@dataclass(frozen=True)
class StarMethod:
    """
    Realization of the Moyal product.

    Attributes:
        variant (StarVariant): spectral-integral (reference) or derivative-series
        order (int): K, highest bidifferential order kept by the series variant
        derivatives (DerivativeBasis): derivative backend of the series variant
        polynomial_degree (int): per-axis Legendre degree used to detect polynomial symbols
    """
    variant: StarVariant = StarVariant.SPECTRAL
    order: int = 8
    derivatives: DerivativeBasis = DerivativeBasis.AUTO
    polynomial_degree: int = 6

    def __post_init__(self):
        if self.variant == StarVariant.SERIES and self.order < 1:
            raise OrderBoundError(f"series star product needs K >= 1, got {self.order}")
        if self.polynomial_degree < 0:
            raise OrderBoundError(f"polynomial degree must be non-negative, got {self.polynomial_degree}")

    @classmethod
    def spectral(cls) -> "StarMethod":
        return cls(StarVariant.SPECTRAL)

    @classmethod
    def series(cls, order: int = 8, derivatives: DerivativeBasis = DerivativeBasis.AUTO) -> "StarMethod":
        return cls(StarVariant.SERIES, order=order, derivatives=derivatives)


SPECTRAL = StarMethod.spectral()
