import numpy as np
import pytest

from src.app.config.default_settings import DEFAULT_TOLERANCES
from src.app.moyal.domain.star_method import SPECTRAL, BandLimitPolicy, DerivativeBasis, StarMethod
from src.app.moyal.service.diagnostics import (
    associativity_defect,
    correspondence_defect,
    hbar_scaling_study,
    method_agreement,
    smooth_test_pair,
)
from src.app.moyal.service.star import moyal_bracket, poisson_bracket, star, unitarity_defect
from src.app.phase_space.domain.grid import balanced_grid
from src.app.phase_space.domain.symbol import Symbol
from src.app.phase_space.service.weyl import (
    constant_symbol,
    interior_mask,
    symbol_from_function,
)
from src.app.utils.errors import BandLimitError, OrderBoundError, ShapeMismatchError


def test_spectral_star_matches_operator_product(small_grid, band_limited):
    f, g = band_limited(small_grid), band_limited(small_grid)
    assert correspondence_defect(f, g) < DEFAULT_TOLERANCES["correspondence"]


def test_operator_product_is_only_an_oracle_for_the_spectral_star(small_grid, rng):
    noise_f = Symbol(small_grid, rng.standard_normal((32, 32)))
    noise_g = Symbol(small_grid, rng.standard_normal((32, 32)))
    assert correspondence_defect(noise_f, noise_g) > 1e-3


def test_plane_waves_pick_up_the_moyal_phase(small_grid):
    a, b, hbar = 3.0 * small_grid.dp, 5.0 * small_grid.dq, small_grid.hbar
    left = symbol_from_function(small_grid, lambda q, p: np.exp(1j * a * q / hbar))
    right = symbol_from_function(small_grid, lambda q, p: np.exp(1j * b * p / hbar))
    q, p = small_grid.mesh()
    wave = np.exp(1j * (a * q + b * p) / hbar)
    assert np.max(np.abs(star(left, right).values - np.exp(-0.5j * a * b / hbar) * wave)) < 1e-10
    assert np.max(np.abs(star(right, left).values - np.exp(0.5j * a * b / hbar) * wave)) < 1e-10


def test_spectral_star_is_associative(small_grid, band_limited):
    f, g, h = (band_limited(small_grid) for _ in range(3))
    assert associativity_defect(f, g, h) < DEFAULT_TOLERANCES["associativity"]


def test_constant_one_is_the_unit(small_grid, band_limited):
    f = band_limited(small_grid)
    one = constant_symbol(small_grid)
    assert (star(one, f) - f).sup_norm() < 1e-10
    assert (star(f, one) - f).sup_norm() < 1e-10


def test_series_star_of_canonical_pair_is_exact(small_grid):
    q = symbol_from_function(small_grid, lambda q, p: q, real_observable=True)
    p = symbol_from_function(small_grid, lambda q, p: p, real_observable=True)
    method = StarMethod.series(4, DerivativeBasis.POLYNOMIAL)
    qq, pp = small_grid.mesh()
    product = star(q, p, method)
    assert np.max(np.abs(product.values - (qq * pp + 0.5j * small_grid.hbar))) < 1e-9
    assert np.max(np.abs(moyal_bracket(q, p, method).values - 1.0)) < 1e-9


def test_series_agrees_with_spectral_on_smooth_pair():
    f, g = smooth_test_pair(0.1)
    gap = method_agreement(f, g, 8, interior_mask(f.grid, 3.0))
    assert gap < DEFAULT_TOLERANCES["method_agreement"]


def test_hbar_scaling_slopes():
    report = hbar_scaling_study((0.2, 0.1, 0.05))
    assert report.star_slope == pytest.approx(1.0, abs=DEFAULT_TOLERANCES["star_slope"])
    assert report.bracket_slope == pytest.approx(2.0, abs=DEFAULT_TOLERANCES["bracket_slope"])
    assert [row["hbar"] for row in report.rows()] == [0.2, 0.1, 0.05]


def test_poisson_bracket_of_gaussians_is_antisymmetric():
    f, g = smooth_test_pair(0.2)
    forward = poisson_bracket(f, g, DerivativeBasis.FOURIER)
    backward = poisson_bracket(g, f, DerivativeBasis.FOURIER)
    assert (forward + backward).sup_norm() < 1e-12


def test_strict_policy_rejects_symbols_outside_the_band(small_grid, rng):
    noise = Symbol(small_grid, rng.standard_normal((32, 32)))
    with pytest.raises(BandLimitError):
        star(noise, noise, SPECTRAL, BandLimitPolicy.STRICT)


def test_star_requires_a_common_grid(small_grid, band_limited):
    other = balanced_grid(16, 1.0)
    with pytest.raises(ShapeMismatchError):
        star(band_limited(small_grid), band_limited(other))


def test_series_order_must_be_positive():
    with pytest.raises(OrderBoundError):
        StarMethod.series(0)


def test_grid_commensurate_translation_is_unitary(small_grid):
    a, b, hbar = 2.0 * small_grid.dp, 3.0 * small_grid.dq, small_grid.hbar
    translation = symbol_from_function(small_grid, lambda q, p: np.exp(1j * (a * q - b * p) / hbar))
    assert unitarity_defect(translation, band_limit=BandLimitPolicy.IGNORE) < 1e-10
    assert unitarity_defect(constant_symbol(small_grid)) < 1e-12
