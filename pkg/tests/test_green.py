import numpy as np
import pytest

from src.app.config.default_settings import DEFAULT_TOLERANCES
from src.app.dynamics.domain.potential import PotentialSpec
from src.app.dynamics.domain.route import ScatteringRoute
from src.app.green.domain.green_request import ConvergenceRow, GreenRequest
from src.app.green.domain.source_pulse import SourcePulse
from src.app.green.infrastructure.csv_convergence_repository import CsvConvergenceRepository
from src.app.green.service.extrapolation import extrapolate, neville_tableau
from src.app.green.service.green_functions import green_function, quadratic_green_oracle
from src.app.green.service.green_service import GreenService
from src.app.phase_space.domain.grid import balanced_grid
from src.app.utils.errors import ConvergenceError, OrderBoundError, PulseWindowError, SerializationError


def test_neville_recovers_a_polynomial_in_h_squared():
    steps = [0.4, 0.2, 0.1]
    estimates = [np.full(3, 1.0 + 2.0 * h ** 2 + 3.0 * h ** 4) for h in steps]
    value, error = extrapolate(steps, estimates)
    assert np.max(np.abs(value - 1.0)) < 1e-12
    assert error > 0.0
    tableau = neville_tableau(steps, estimates)
    assert [len(row) for row in tableau] == [1, 2, 3]


def test_single_step_has_no_error_estimate():
    value, error = extrapolate([0.1], [np.ones(2)])
    assert np.all(value == 1.0)
    assert error == float("inf")


@pytest.mark.parametrize(
    "steps,count",
    [([0.2, 0.1], 1), ([0.1, 0.1], 2), ([0.1, -0.1], 2), ([], 0)],
)
def test_extrapolation_rejects_bad_ladders(steps, count):
    with pytest.raises(ConvergenceError):
        neville_tableau(steps, [np.zeros(2)] * count)


def test_source_pulse_has_unit_profile_mass():
    pulse = SourcePulse(0.5, 0.2, 0.03)
    assert pulse.peak * 0.2 * np.sqrt(2.0 * np.pi) == pytest.approx(0.03, rel=1e-14)
    train = pulse.as_train()
    assert len(train.pulses) == 1
    assert train.pulses[0].peak == pulse.peak
    assert SourcePulse(0.5, 0.2, 0.0).as_train().is_zero


def test_source_pulse_validation():
    with pytest.raises(PulseWindowError):
        SourcePulse(0.0, 0.0, 1.0)
    SourcePulse(0.0, 0.1, 1.0).validate(-1.0, 1.0)
    with pytest.raises(PulseWindowError):
        SourcePulse(0.9, 0.1, 1.0).validate(-1.0, 1.0)
    assert SourcePulse(1.0, 0.1, 2.0).tail_mass(-1.0, 1.0) == pytest.approx(1.0, rel=1e-12)


def make_request(small_grid, oscillator, times, **kwargs):
    return GreenRequest(times=times, base=PotentialSpec(-1.0, 1.0), hamiltonian=oscillator, grid=small_grid, steps=100, **kwargs)


def test_green_request_validation(small_grid, oscillator):
    with pytest.raises(OrderBoundError):
        make_request(small_grid, oscillator, (-0.5, 0.0, 0.5))
    with pytest.raises(OrderBoundError):
        make_request(small_grid, oscillator, ())
    with pytest.raises(PulseWindowError):
        make_request(small_grid, oscillator, (0.2, 0.2))
    with pytest.raises(PulseWindowError):
        make_request(small_grid, oscillator, (0.0, 1.0))
    with pytest.raises(PulseWindowError):
        make_request(small_grid, oscillator, (0.0,), epsilons=())

    request = make_request(small_grid, oscillator, (0.5, -0.5), route="hilbert")
    assert request.order == 2
    assert request.route == ScatteringRoute.HILBERT
    assert request.swapped().times == (-0.5, 0.5)


def test_oracle_for_one_insertion():
    grid = balanced_grid(16, 0.5)
    q, p = grid.mesh()
    oracle = quadratic_green_oracle([0.3], grid, 1.0, reference_time=0.3)
    assert np.max(np.abs(oracle.values - q / (1j * grid.hbar))) < 1e-14


def test_oracle_for_two_insertions_is_time_ordered():
    grid = balanced_grid(16, 0.5)
    hbar = grid.hbar
    q, p = grid.mesh()
    later = q * np.cos(1.0) + p * np.sin(1.0)
    expected = -(later * q + 0.5j * hbar * np.sin(-1.0)) / hbar ** 2
    for times in ((0.0, 1.0), (1.0, 0.0)):
        oracle = quadratic_green_oracle(times, grid, 1.0, reference_time=0.0)
        assert np.max(np.abs(oracle.values - expected)) < 1e-13
    with pytest.raises(PulseWindowError):
        quadratic_green_oracle((0.0, 0.5, 1.0), grid, 1.0, reference_time=0.0)


def test_convergence_repository_round_trip(tmp_path):
    rows = [ConvergenceRow(0.1, 0.2, 1.5, 1e-3), ConvergenceRow(0.0, 0.0, 1.0 / 3.0, 0.0)]
    repository = CsvConvergenceRepository()
    assert repository.load(repository.save(rows, tmp_path / "table.csv")) == rows


def test_convergence_repository_rejects_foreign_tables(tmp_path):
    path = tmp_path / "other.csv"
    path.write_text("a,b,c\n1,2,3\n")
    with pytest.raises(SerializationError):
        CsvConvergenceRepository().load(path)
    with pytest.raises(SerializationError):
        CsvConvergenceRepository().load(tmp_path / "missing.csv")


def test_service_reads_ladders_from_config(small_grid, oscillator):
    config = {"green": {"epsilons": [0.1, 0.05], "sigmas": [0.3, 0.2], "route": "hilbert"}, "runtime": {"max_workers": 2}}
    service = GreenService(CsvConvergenceRepository(), config)
    request = service.request([0.0], PotentialSpec(-1.0, 1.0), oscillator, small_grid, 50)
    assert request.epsilons == (0.1, 0.05)
    assert request.sigmas == (0.3, 0.2)
    assert request.route == ScatteringRoute.HILBERT
    assert service.max_workers == 2


def test_first_order_green_function_of_the_free_oscillator(tmp_path, oscillator):
    grid = balanced_grid(128, 1.0)
    base = PotentialSpec(-1.0, 1.0)
    request = GreenRequest(
        times=(0.0,),
        base=base,
        hamiltonian=oscillator,
        grid=grid,
        steps=200,
        epsilons=(0.05,),
        sigmas=(0.1,),
        extrapolate=False,
    )
    service = GreenService(CsvConvergenceRepository())
    result = service.estimate(request, tmp_path / "convergence.csv")

    oracle = quadratic_green_oracle((0.0,), grid, 1.0, reference_time=base.start)
    mask = result.mask
    relative = np.max(np.abs((result.symbol - oracle).values[mask])) / np.max(np.abs(oracle.values[mask]))
    # sigma smearing of the insertion costs exp(-sigma^2 / 2)
    assert relative < 2e-2
    assert len(CsvConvergenceRepository().load(tmp_path / "convergence.csv")) == len(result.rows) == 3


@pytest.mark.slow
def test_second_order_green_function_is_time_ordered(oscillator):
    grid = balanced_grid(64, 1.0)
    base = PotentialSpec(-4.5, 4.5)
    request = GreenRequest(times=(-1.0, 1.0), base=base, hamiltonian=oscillator, grid=grid, steps=300)
    result = green_function(request)

    oracle = quadratic_green_oracle((-1.0, 1.0), grid, 1.0, reference_time=base.start)
    assert (result.symbol - oracle).sup_norm(result.mask) < DEFAULT_TOLERANCES["green_second_order"]
    assert result.epsilon_slope == pytest.approx(2.0, abs=DEFAULT_TOLERANCES["epsilon_slope"])
    assert result.cauchy_error < DEFAULT_TOLERANCES["cauchy_relative"]
