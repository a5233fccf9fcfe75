from .star import check_band_limit, moyal_bracket, poisson_bracket, star, unitarity_defect

__all__ = ["star", "moyal_bracket", "poisson_bracket", "unitarity_defect", "check_band_limit"]
