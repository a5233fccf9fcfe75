from .star_method import SPECTRAL, BandLimitPolicy, DerivativeBasis, StarMethod, StarVariant

__all__ = ["StarMethod", "StarVariant", "DerivativeBasis", "BandLimitPolicy", "SPECTRAL"]
