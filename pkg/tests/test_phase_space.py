import numpy as np
import pytest

from src.app.dynamics.service.hilbert_route import phase_space_centroid
from src.app.phase_space.domain.grid import balanced_grid, make_grid
from src.app.phase_space.domain.symbol import OperatorMatrix, Symbol, WaveFunction
from src.app.phase_space.infrastructure.binary_symbol_repository import BinarySymbolRepository
from src.app.phase_space.infrastructure.csv_symbol_repository import CsvSymbolRepository
from src.app.phase_space.service.states import (
    coherent_state,
    harmonic_ground_state,
    phase_space_integral,
    wigner_of_state,
)
from src.app.phase_space.service.weyl import (
    band_limit_excess,
    boundary_mass,
    constant_symbol,
    position_operator,
    symbol_from_function,
    weyl_quantize,
    weyl_symbol_of,
)
from src.app.utils.errors import GridError, HermiticityError, NormalizationError, SerializationError, ShapeMismatchError


@pytest.mark.parametrize("points", [7, 6, 0])
def test_grid_rejects_bad_point_counts(points):
    with pytest.raises(GridError):
        make_grid(1.0, points, 1.0)


@pytest.mark.parametrize("half_extent,hbar", [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0)])
def test_grid_rejects_non_positive_extent_or_hbar(half_extent, hbar):
    with pytest.raises(GridError):
        make_grid(half_extent, 16, hbar)


def test_grid_cell_satisfies_uncertainty_spacing():
    grid = make_grid(3.0, 40, 0.7)
    assert grid.dq * grid.dp * grid.points == pytest.approx(2.0 * np.pi * 0.7, rel=1e-14)
    assert grid.q[0] == -3.0
    assert grid.p[0] == pytest.approx(-grid.momentum_extent)


def test_balanced_grid_has_equal_half_widths():
    grid = balanced_grid(48, 0.3)
    assert grid.half_extent == pytest.approx(grid.momentum_extent, rel=1e-12)


def test_symbol_round_trip_is_exact(small_grid, band_limited):
    symbol = band_limited(small_grid)
    assert (weyl_symbol_of(weyl_quantize(symbol)) - symbol).sup_norm() < 1e-10


def test_operator_round_trip_is_exact_for_band_limited_operators(small_grid, band_limited):
    matrix = weyl_quantize(band_limited(small_grid))
    back = weyl_quantize(weyl_symbol_of(matrix))
    assert np.max(np.abs(back.entries - matrix.entries)) < 1e-10


def test_operator_round_trip_projects_arbitrary_matrices(small_grid, rng):
    n = small_grid.points
    matrix = OperatorMatrix(small_grid, rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    once = weyl_quantize(weyl_symbol_of(matrix))
    twice = weyl_quantize(weyl_symbol_of(once))
    assert np.max(np.abs(twice.entries - once.entries)) < 1e-10


@pytest.mark.parametrize("points,half_extent,hbar", [(16, 3.0, 0.5), (18, 2.0, 1.0), (32, 4.0, 0.3)])
def test_hermitian_matrices_have_real_symbols(rng, points, half_extent, hbar):
    grid = make_grid(half_extent, points, hbar)
    raw = rng.standard_normal((points, points)) + 1j * rng.standard_normal((points, points))
    hermitian = OperatorMatrix(grid, raw + raw.conj().T)
    symbol = weyl_symbol_of(hermitian)
    assert np.max(np.abs(symbol.values.imag)) < 1e-10
    assert weyl_symbol_of(hermitian, real_observable=True).real_observable


@pytest.mark.parametrize("points", [16, 18, 32])
def test_real_noise_symbols_quantize_to_hermitian(rng, points):
    grid = make_grid(3.0, points, 0.5)
    noise = Symbol(grid, rng.standard_normal((points, points)), real_observable=True)
    assert weyl_quantize(noise).hermiticity_defect() < 1e-12


def test_adjoint_symbol_is_the_conjugate(small_grid, rng):
    n = small_grid.points
    matrix = OperatorMatrix(small_grid, rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    adjoint = OperatorMatrix(small_grid, matrix.entries.conj().T)
    assert np.max(np.abs(weyl_symbol_of(adjoint).values - weyl_symbol_of(matrix).values.conj())) < 1e-10
    noise = Symbol(small_grid, rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    conjugated = weyl_quantize(Symbol(small_grid, noise.values.conj()))
    assert np.max(np.abs(conjugated.entries - weyl_quantize(noise).entries.conj().T)) < 1e-12


def test_identity_and_position_symbols(small_grid):
    identity = weyl_symbol_of(OperatorMatrix(small_grid, np.eye(small_grid.points)))
    assert (identity - constant_symbol(small_grid)).sup_norm() < 1e-12

    q, _ = small_grid.mesh()
    position = weyl_symbol_of(position_operator(small_grid))
    assert np.max(np.abs(position.values - q)) < 1e-10


def test_trace_is_symbol_sum_over_points(small_grid, band_limited):
    symbol = band_limited(small_grid)
    trace = np.trace(weyl_quantize(symbol).entries)
    assert abs(trace - np.sum(symbol.values) / small_grid.points) < 1e-10


def test_real_band_limited_symbol_quantizes_to_hermitian(small_grid, band_limited):
    symbol = Symbol(small_grid, band_limited(small_grid).values.real, real_observable=True)
    assert weyl_quantize(symbol).hermiticity_defect() < 1e-10
    assert band_limit_excess(symbol) < 1e-12


def test_ground_state_wigner_matches_gaussian(grid):
    wigner = wigner_of_state(harmonic_ground_state(grid))
    q, p = grid.mesh()
    expected = np.exp(-(q ** 2 + p ** 2) / grid.hbar) / (np.pi * grid.hbar)
    assert np.max(np.abs(wigner.values - expected)) < 1e-6
    assert abs(phase_space_integral(wigner) - 1.0) < 1e-8


def test_wigner_rejects_unnormalized_state(small_grid):
    psi = WaveFunction(small_grid, 2.0 * harmonic_ground_state(small_grid).values)
    with pytest.raises(NormalizationError):
        wigner_of_state(psi)
    relaxed = wigner_of_state(psi, strict=False)
    assert abs(phase_space_integral(relaxed) - 1.0) < 1e-8


def test_coherent_state_centroid(grid):
    q0, p0 = phase_space_centroid(coherent_state(grid, 1.0, -0.5))
    assert q0 == pytest.approx(1.0, abs=1e-8)
    assert p0 == pytest.approx(-0.5, abs=1e-8)


def test_symbol_validation(small_grid):
    with pytest.raises(ShapeMismatchError):
        Symbol(small_grid, np.zeros((4, 4)))
    with pytest.raises(HermiticityError):
        Symbol(small_grid, np.full((32, 32), 1j), real_observable=True)
    with pytest.raises(NormalizationError):
        WaveFunction(small_grid, np.ones(32), normalized=True)


def test_boundary_mass_separates_confined_from_spread_symbols(grid):
    confined = symbol_from_function(grid, lambda q, p: np.exp(-(q ** 2 + p ** 2)))
    spread = symbol_from_function(grid, lambda q, p: np.cos(0.3 * q))
    assert boundary_mass(confined) < 1e-12
    assert boundary_mass(spread) > 1e-3


def test_binary_repository_round_trip(tmp_path, small_grid, band_limited):
    repository = BinarySymbolRepository()
    symbol = band_limited(small_grid)
    loaded = repository.load(repository.save(symbol, tmp_path / "s.wml"))
    assert isinstance(loaded, Symbol)
    assert loaded.grid.matches(small_grid)
    np.testing.assert_array_equal(loaded.values, symbol.values)

    matrix = weyl_quantize(symbol)
    loaded = repository.load(repository.save(matrix, tmp_path / "m.wml"))
    assert isinstance(loaded, OperatorMatrix)
    np.testing.assert_array_equal(loaded.entries, matrix.entries)


def test_binary_repository_rejects_foreign_files(tmp_path):
    path = tmp_path / "bad.wml"
    path.write_bytes(b"not a symbol file at all, definitely longer than a header")
    with pytest.raises(SerializationError):
        BinarySymbolRepository().load(path)
    with pytest.raises(SerializationError):
        BinarySymbolRepository().load(tmp_path / "missing.wml")


def test_csv_repository_round_trip_and_size_cap(tmp_path, band_limited):
    grid = balanced_grid(8, 1.0)
    symbol = band_limited(grid)
    repository = CsvSymbolRepository(max_points=16)
    loaded = repository.load(repository.save(symbol, tmp_path / "s.csv"))
    assert loaded.grid.matches(grid)
    np.testing.assert_array_equal(loaded.values, symbol.values)

    with pytest.raises(SerializationError):
        repository.save(band_limited(balanced_grid(32, 1.0)), tmp_path / "big.csv")
