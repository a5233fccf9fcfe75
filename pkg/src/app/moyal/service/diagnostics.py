"""
Algebraic diagnostics for the star product: associativity, operator
correspondence, agreement of the two realizations, and hbar scaling.
"""
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from src.app.moyal.domain.star_method import SPECTRAL, BandLimitPolicy, DerivativeBasis, StarMethod
from src.app.moyal.service.star import moyal_bracket, poisson_bracket, star
from src.app.phase_space.domain.grid import PhaseSpaceGrid, balanced_grid
from src.app.phase_space.domain.symbol import Symbol
from src.app.phase_space.service.weyl import symbol_from_function, weyl_quantize, weyl_symbol_of

SymbolPairFactory = Callable[[float], Tuple[Symbol, Symbol]]


def associativity_defect(f: Symbol, g: Symbol, h: Symbol, method: StarMethod = SPECTRAL) -> float:
    left = star(star(f, g, method, BandLimitPolicy.IGNORE), h, method, BandLimitPolicy.IGNORE)
    right = star(f, star(g, h, method, BandLimitPolicy.IGNORE), method, BandLimitPolicy.IGNORE)
    return (left - right).sup_norm()


def correspondence_defect(f: Symbol, g: Symbol, method: StarMethod = SPECTRAL) -> float:
    """sup |f * g - symbol(quantize(f) quantize(g))|."""
    reference = weyl_symbol_of(weyl_quantize(f) @ weyl_quantize(g))
    return (star(f, g, method, BandLimitPolicy.IGNORE) - reference).sup_norm()


def method_agreement(
    f: Symbol,
    g: Symbol,
    order: int = 8,
    mask: Optional[np.ndarray] = None,
) -> float:
    """sup |spectral - series(K)| for the same factors."""
    series = StarMethod.series(order, DerivativeBasis.FOURIER)
    spectral = star(f, g, SPECTRAL, BandLimitPolicy.IGNORE)
    return (spectral - star(f, g, series)).sup_norm(mask)


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log(ys) against log(xs)."""
    slope, _ = np.polyfit(np.log(np.asarray(xs, dtype=float)), np.log(np.asarray(ys, dtype=float)), 1)
    return float(slope)


def scaling_grid(hbar: float, half_width: float = 7.0) -> PhaseSpaceGrid:
    """Balanced grid whose half-widths are at least ``half_width`` at this hbar."""
    points = int(np.ceil(2.0 * half_width ** 2 / (np.pi * hbar)))
    points += points % 2
    return balanced_grid(max(points, 8), hbar)


def smooth_test_pair(hbar: float) -> Tuple[Symbol, Symbol]:
    """Two fixed real Gaussian-type symbols with a non-vanishing Poisson bracket."""
    grid = scaling_grid(hbar)
    f = symbol_from_function(
        grid, lambda q, p: np.exp(-((q - 0.5) ** 2 + p ** 2) / 2.0), real_observable=True
    )
    g = symbol_from_function(
        grid, lambda q, p: (1.0 + 0.5 * q) * np.exp(-(q ** 2 + (p - 0.5) ** 2) / 2.0), real_observable=True
    )
    return f, g


@dataclass
class HbarScalingReport:
    hbars: List[float]
    star_errors: List[float] = field(default_factory=list)
    bracket_errors: List[float] = field(default_factory=list)

    @property
    def star_slope(self) -> float:
        return loglog_slope(self.hbars, self.star_errors)

    @property
    def bracket_slope(self) -> float:
        return loglog_slope(self.hbars, self.bracket_errors)

    def rows(self) -> List[dict]:
        return [
            {"hbar": h, "star_error": s, "bracket_error": b}
            for h, s, b in zip(self.hbars, self.star_errors, self.bracket_errors)
        ]


def hbar_scaling_study(
    hbars: Sequence[float] = (0.4, 0.2, 0.1, 0.05),
    factory: SymbolPairFactory = smooth_test_pair,
) -> HbarScalingReport:
    """
    Distance of f * g from f g and of the Moyal bracket from the Poisson
    bracket as hbar shrinks; expected slopes are 1 and 2.
    """
    report = HbarScalingReport(hbars=[float(h) for h in hbars])
    for hbar in report.hbars:
        f, g = factory(hbar)
        product = star(f, g, SPECTRAL, BandLimitPolicy.IGNORE)
        report.star_errors.append((product - f.pointwise(g)).sup_norm())
        bracket = moyal_bracket(f, g, SPECTRAL, BandLimitPolicy.IGNORE)
        classical = poisson_bracket(f, g, DerivativeBasis.FOURIER)
        report.bracket_errors.append((bracket - classical).sup_norm())
    return report
