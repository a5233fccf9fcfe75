import numpy as np
import pytest

from src.app.perturbation.domain.contraction_kernel import (
    feynman_kernel,
    pauli_jordan_kernel,
    pv_timeordered_kernel,
    symmetric_part_kernel,
)
from src.app.perturbation.domain.functional_polynomial import FunctionalPolynomial
from src.app.perturbation.domain.time_grid import TimeGrid
from src.app.perturbation.infrastructure.json_polynomial_repository import JsonPolynomialRepository
from src.app.perturbation.service.algebra import (
    star_dyson,
    star_dyson_orders,
    star_functionals,
    wick_contract,
    wick_expand,
)
from src.app.perturbation.service.energy import kernel_energy_transform
from src.app.perturbation.service.realization import evaluate_on_phase_space
from src.app.phase_space.domain.grid import balanced_grid
from src.app.utils.errors import (
    DegreeOverflowError,
    OrderBoundError,
    PulseWindowError,
    SerializationError,
    ShapeMismatchError,
    SingularEnergyError,
)

PAIR_GRID = TimeGrid(0.0, 1.0, 2)


def quartic_envelope(t):
    return 0.1 * np.exp(-t ** 2)


def source_envelope(t):
    return 0.2 * np.cos(t)


def test_star_of_two_fields_carries_half_the_bracket():
    kernel = pauli_jordan_kernel(1.0, PAIR_GRID)
    q0, q1 = FunctionalPolynomial.field_at(0, 2), FunctionalPolynomial.field_at(1, 2)
    forward = star_functionals(q0, q1, kernel)
    assert forward.coefficient(0, (0, 1)) == 1.0
    assert forward.coefficient(1) == pytest.approx(0.5j * np.sin(1.0), abs=1e-15)

    commutator = forward - star_functionals(q1, q0, kernel)
    assert commutator.coefficient(0, (0, 1)) == 0.0
    assert commutator.coefficient(1) == pytest.approx(1j * np.sin(1.0), abs=1e-15)


def test_star_product_respects_the_degree_bound():
    kernel = pauli_jordan_kernel(1.0, PAIR_GRID)
    with pytest.raises(DegreeOverflowError):
        star_functionals(FunctionalPolynomial.field_at(0, 1), FunctionalPolynomial.field_at(1, 1), kernel)
    with pytest.raises(DegreeOverflowError):
        FunctionalPolynomial.field_at(0, 1).product(FunctionalPolynomial.field_at(1, 1))


def test_star_dyson_equals_wick_expansion_with_pv_kernel():
    time_grid = TimeGrid(-1.0, 1.0, 5)
    dyson = star_dyson(quartic_envelope, source_envelope, time_grid, 1.0, (1, 2), 6)
    wick = wick_expand(quartic_envelope, source_envelope, pv_timeordered_kernel(1.0, time_grid), (1, 2), 6)
    assert len(dyson) > 0
    assert dyson.max_difference(wick) < 1e-12


def test_feynman_kernel_differs_from_pv_at_second_source_order():
    time_grid = TimeGrid(-1.0, 1.0, 5, "simpson")
    pv = wick_expand(np.zeros(5), source_envelope, pv_timeordered_kernel(1.0, time_grid), (0, 2), 2)
    feynman = wick_expand(np.zeros(5), source_envelope, feynman_kernel(1.0, time_grid), (0, 2), 2)
    assert pv.max_difference(feynman) > 1e-3


def test_first_order_source_term():
    time_grid = TimeGrid(-1.0, 1.0, 5)
    components = star_dyson_orders(np.zeros(5), source_envelope, time_grid, 1.0, (0, 1), 1)
    first = components[(0, 1)]
    for node, (t, w) in enumerate(zip(time_grid.times, time_grid.weights)):
        assert first.coefficient(-1, (node,)) == pytest.approx(-1j * w * source_envelope(t), abs=1e-15)


def test_wick_contraction_of_a_pair():
    kernel = pv_timeordered_kernel(1.0, PAIR_GRID)
    pair = FunctionalPolynomial(2, {(0, (0, 1)): 1.0})
    contracted = wick_contract(pair, kernel)
    assert contracted.coefficient(0, (0, 1)) == 1.0
    assert contracted.coefficient(1) == pytest.approx(-0.5j * np.sin(1.0), abs=1e-15)


def test_kernel_closed_forms_are_consistent():
    time_grid = TimeGrid(0.0, 3.0, 7)
    pj = pauli_jordan_kernel(2.0, time_grid)
    pv = pv_timeordered_kernel(2.0, time_grid)
    assert pj.antisymmetric
    assert pv.symmetric
    combined = pv.values + symmetric_part_kernel(2.0, time_grid).values
    assert np.max(np.abs(feynman_kernel(2.0, time_grid).values - combined)) < 1e-15


@pytest.mark.parametrize(
    "orders,max_degree,error",
    [((3, 0), 20, OrderBoundError), ((0, 5), 20, OrderBoundError), ((-1, 0), 4, OrderBoundError), ((1, 1), 4, DegreeOverflowError)],
)
def test_order_and_degree_bounds(orders, max_degree, error):
    with pytest.raises(error):
        star_dyson(quartic_envelope, source_envelope, TimeGrid(-1.0, 1.0, 3), 1.0, orders, max_degree)


def test_envelope_samples_must_match_the_nodes():
    with pytest.raises(ShapeMismatchError):
        star_dyson(np.zeros(3), source_envelope, TimeGrid(-1.0, 1.0, 5), 1.0, (1, 0), 4)


@pytest.mark.parametrize(
    "arguments",
    [(0.0, 1.0, 4, "simpson"), (0.0, 1.0, 1, "trapezoid"), (0.0, 1.0, 5, "midpoint"), (1.0, 0.0, 5, "trapezoid")],
)
def test_time_grid_validation(arguments):
    with pytest.raises(PulseWindowError):
        TimeGrid(*arguments)


def test_quadrature_weights_integrate_constants():
    assert TimeGrid(0.0, 2.0, 5, "simpson").weights.sum() == pytest.approx(2.0, rel=1e-14)
    assert TimeGrid(0.0, 2.0, 4).weights.sum() == pytest.approx(2.0, rel=1e-14)


def test_pv_kernel_transform_is_the_principal_value():
    kernel = pv_timeordered_kernel(1.0, PAIR_GRID)
    energies = [-3.0, -2.5, -2.0, -1.6, 0.0, 0.4, 1.6, 2.0, 3.0]
    report = kernel_energy_transform(kernel, energies)
    assert report.constant == pytest.approx(1j, abs=1e-2)
    assert report.pv_relative_error < 1e-2
    assert report.zero_energy_error < 2e-2
    assert [row["E"] for row in report.rows()] == energies


def test_energy_transform_rejects_the_mass_shell():
    kernel = pv_timeordered_kernel(1.0, PAIR_GRID)
    with pytest.raises(SingularEnergyError):
        kernel_energy_transform(kernel, [0.0, 1.0, 2.0])
    report = kernel_energy_transform(kernel, [-2.0, -1.0, 0.0, 1.0, 2.0], exclude_singular=True)
    assert list(report.energies) == [-2.0, 0.0, 2.0]


def test_phase_space_realization_of_fields():
    grid = balanced_grid(16, 0.5)
    time_grid = TimeGrid(0.0, 1.0, 3)
    q, p = grid.mesh()
    at_start = evaluate_on_phase_space(FunctionalPolynomial.field_at(0, 1), time_grid, grid, 1.0)
    assert np.max(np.abs(at_start.values - q)) < 1e-15
    at_end = evaluate_on_phase_space(FunctionalPolynomial.field_at(2, 1), time_grid, grid, 2.0)
    expected = q * np.cos(2.0) + p * np.sin(2.0) / 2.0
    assert np.max(np.abs(at_end.values - expected)) < 1e-14
    quantum = evaluate_on_phase_space(FunctionalPolynomial(0, {(1, ()): 2.0}), time_grid, grid, 1.0)
    assert np.max(np.abs(quantum.values - 1.0)) < 1e-15


def test_json_repository_round_trip(tmp_path):
    time_grid = TimeGrid(-1.0, 1.0, 3)
    polynomial = star_dyson(quartic_envelope, source_envelope, time_grid, 1.0, (1, 1), 5)
    repository = JsonPolynomialRepository(indent=2)
    path = repository.save(polynomial, tmp_path / "dyson.json", time_grid.times)
    loaded, node_times = repository.load(path)
    assert loaded.max_degree == 5
    assert loaded.max_difference(polynomial) == 0.0
    assert node_times == tuple(time_grid.times)


def test_json_repository_rejects_malformed_documents(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"max_degree": "many"}')
    with pytest.raises(SerializationError):
        JsonPolynomialRepository().load(path)
