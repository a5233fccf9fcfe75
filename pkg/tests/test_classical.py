import numpy as np
import pytest
import sympy as sp

from src.app.classical.domain.duffing import DuffingParams, Trajectory
from src.app.classical.domain.lattice import FieldData, LagrangianSpec, LatticeField, SurfaceParameterization
from src.app.classical.infrastructure.csv_classical_repository import CsvClassicalRepository
from src.app.classical.service.action import action_stationarity_study, evaluate_action
from src.app.classical.service.classical_limit import classical_limit_study
from src.app.classical.service.covariant import conjugate_momentum, covariant_hamiltonian_densities
from src.app.classical.service.duffing import (
    classical_scattering_map,
    duhamel_response,
    scattering_map_jacobian,
    solve_duffing,
    symplectic_defect,
    work_energy_residual,
)
from src.app.classical.service.functionals import (
    functional_poisson_bracket,
    hamilton_rates,
    lattice_energy_functional,
    point_field,
    point_momentum,
)
from src.app.classical.service.klein_gordon import energy_drift, lattice_energy, lattice_frequency, solve_klein_gordon
from src.app.dynamics.domain.potential import GaussianPulse, PotentialSpec, PulseTrain
from src.app.utils.errors import (
    CFLViolationError,
    GridError,
    InconsistentMomentumError,
    LatticeMismatchError,
    PulseWindowError,
    SerializationError,
    ShapeMismatchError,
    SpacelikeError,
    StepResolutionError,
    WindowMismatchError,
)


def kicked(quartic_peak=0.1, source_peak=0.2):
    return DuffingParams(
        1.0,
        -4.0,
        4.0,
        quartic=PulseTrain((GaussianPulse(0.0, 0.5, quartic_peak),)),
        source=PulseTrain((GaussianPulse(-0.5, 0.4, source_peak),)),
    )


def test_free_oscillator_returns_after_a_period():
    params = DuffingParams(1.0, 0.0, 2.0 * np.pi)
    trajectory = solve_duffing(params, (0.7, -0.3), 2000)
    q, p = trajectory.final
    assert q == pytest.approx(0.7, abs=1e-8)
    assert p == pytest.approx(-0.3, abs=1e-8)


def test_coarse_duffing_steps_are_rejected():
    with pytest.raises(StepResolutionError):
        solve_duffing(DuffingParams(1.0, 0.0, 2.0 * np.pi), (1.0, 0.0), 10)


def test_duffing_params_validation():
    with pytest.raises(GridError):
        DuffingParams(0.0, 0.0, 1.0)
    with pytest.raises(PulseWindowError):
        DuffingParams(1.0, 1.0, 0.0)
    with pytest.raises(PulseWindowError):
        DuffingParams(1.0, 0.0, 1.0, source=PulseTrain((GaussianPulse(0.5, 0.3, 1.0),)))


def test_linear_drive_matches_duhamel_response():
    params = kicked(quartic_peak=0.0)
    trajectory = solve_duffing(params, (0.3, -0.2), 4000)
    q, p = duhamel_response(params, (0.3, -0.2), trajectory.times[::500])
    assert np.max(np.abs(q - trajectory.q[::500])) < 1e-8
    assert np.max(np.abs(p - trajectory.p[::500])) < 1e-8


def test_work_balances_energy_change():
    params = kicked()
    trajectory = solve_duffing(params, (np.array([0.5, -1.0]), np.array([0.1, 0.4])), 4000)
    assert work_energy_residual(trajectory, params) < 1e-8


def test_free_scattering_map_is_the_identity():
    params = DuffingParams(1.0, 0.0, 3.0)
    q, p = classical_scattering_map(params, (np.array([0.2, -0.6]), np.array([1.0, 0.3])), 2000)
    assert np.max(np.abs(q - [0.2, -0.6])) < 1e-10
    assert np.max(np.abs(p - [1.0, 0.3])) < 1e-10


def test_scattering_map_is_symplectic():
    jacobian = scattering_map_jacobian(kicked(), (0.5, 0.2), 2000)
    assert symplectic_defect(jacobian) < 1e-6


def test_action_is_stationary_at_second_order():
    report = action_stationarity_study(kicked(), (0.5, 0.0), 4000)
    assert report.slope == pytest.approx(2.0, abs=0.2)
    assert [row["delta"] for row in report.rows()] == report.deltas


def test_action_needs_the_full_window():
    params = kicked()
    short = solve_duffing(DuffingParams(1.0, -4.0, 3.0), (0.5, 0.0), 4000)
    with pytest.raises(WindowMismatchError):
        evaluate_action(short, LagrangianSpec(1.0), params)


def cosine_mode(sites=64, spacing=0.5, mode=3):
    field = LatticeField.zeros(sites, spacing)
    phi = np.cos(field.wavenumber(mode) * field.positions)
    return LatticeField(phi, np.zeros(sites), spacing)


def test_leapfrog_rotates_a_single_mode_exactly():
    initial = cosine_mode()
    spec = LagrangianSpec(mass=1.0)
    steps, duration = 400, 20.0
    dt = duration / steps
    final = solve_klein_gordon(initial, spec, duration, steps)
    omega = lattice_frequency(initial.wavenumber(3), initial.spacing, spec.mass, dt)
    assert np.max(np.abs(final.phi - np.cos(omega * duration) * initial.phi)) < 1e-9
    assert final.time == pytest.approx(duration, rel=1e-12)


def test_lattice_dispersion_tends_to_the_continuum():
    k = 0.3
    assert lattice_frequency(k, 1e-3, 1.0) == pytest.approx(np.sqrt(1.0 + k ** 2), rel=1e-6)
    assert lattice_frequency(k, 0.5, 1.0) < np.sqrt(1.0 + k ** 2)


def test_cfl_bound():
    with pytest.raises(CFLViolationError):
        solve_klein_gordon(cosine_mode(), LagrangianSpec(), 10.0, 10)


def test_leapfrog_energy_drift_is_small():
    assert energy_drift(cosine_mode(), LagrangianSpec(), 5.0, 10000) < 1e-6


def test_hamilton_equations_from_the_functional_bracket(rng):
    spec = LagrangianSpec(mass=1.2, coupling=lambda x0, x1: 0.3 * np.exp(-((x1 - 4.0) ** 2)))
    field = LatticeField(rng.standard_normal(16), rng.standard_normal(16), 0.5)
    phi_rate, pi_rate = hamilton_rates(field, spec)
    np.testing.assert_allclose(phi_rate, field.pi, rtol=0.0, atol=1e-12)
    g = spec.coupling_at(0.0, field.positions)
    expected = field.laplacian() - spec.mass ** 2 * field.phi - g * field.phi ** 3 / 6.0
    np.testing.assert_allclose(pi_rate, expected, rtol=0.0, atol=1e-12)


def test_energy_gradient_matches_finite_differences(rng):
    spec = LagrangianSpec(mass=0.8)
    field = LatticeField(rng.standard_normal(12), rng.standard_normal(12), 0.25)
    gradient = lattice_energy_functional(field, spec).d_phi
    h = 1e-4
    for site in (0, 5, 11):
        bump = np.zeros(12)
        bump[site] = h
        up = lattice_energy(LatticeField(field.phi + bump, field.pi, field.spacing), spec)
        down = lattice_energy(LatticeField(field.phi - bump, field.pi, field.spacing), spec)
        assert (up - down) / (2.0 * h * field.spacing) == pytest.approx(gradient[site], abs=1e-6)


def test_canonical_brackets(rng):
    field = LatticeField(rng.standard_normal(8), rng.standard_normal(8), 0.5)
    assert functional_poisson_bracket(point_field(field, 2), point_momentum(field, 2)) == pytest.approx(2.0)
    assert functional_poisson_bracket(point_field(field, 2), point_momentum(field, 3)) == 0.0
    other = LatticeField.zeros(8, 0.25)
    with pytest.raises(LatticeMismatchError):
        functional_poisson_bracket(point_field(field, 0), point_field(other, 0))
    with pytest.raises(LatticeMismatchError):
        point_field(field, 8)


def surface_field(s):
    return FieldData(np.sin(s), 0.3 + np.cos(2.0 * s), 0.5 * s ** 2 - 0.1)


def test_flat_surface_densities():
    s = np.linspace(-2.0, 2.0, 17)
    surface = SurfaceParameterization.flat(s, time=0.5)
    field = surface_field(s)
    spec = LagrangianSpec(mass=1.3, coupling=lambda x0, x1: 0.2 + 0.0 * x1)
    momentum = conjugate_momentum(surface, field, spec)
    np.testing.assert_array_equal(momentum, field.phi_x0)

    h0, h1 = covariant_hamiltonian_densities(surface, field, momentum, spec)
    phi_s = field.phi_x1
    expected = 0.5 * (momentum ** 2 + phi_s ** 2 + 1.3 ** 2 * field.phi ** 2) + 0.2 * field.phi ** 4 / 24.0
    np.testing.assert_allclose(h0, expected, rtol=0.0, atol=1e-13)
    np.testing.assert_allclose(h1, momentum * phi_s, rtol=0.0, atol=1e-13)


def stress_flux_oracle():
    """H^j = T^0_j dx1/ds - T^1_j dx0/ds with T^mu_nu = dL/dphi_mu phi_nu - delta L."""
    phi, d0, d1, m, g, j0, j1 = sp.symbols("phi d0 d1 m g j0 j1", real=True)
    lagrangian = (d0 ** 2 - d1 ** 2 - m ** 2 * phi ** 2) / 2 - g * phi ** 4 / 24
    gradient = (d0, d1)
    stress = [[sp.diff(lagrangian, gradient[mu]) * gradient[nu] - (lagrangian if mu == nu else 0) for nu in range(2)] for mu in range(2)]
    densities = [stress[0][nu] * j0 - stress[1][nu] * j1 for nu in range(2)]
    momentum = sp.diff(lagrangian, d0) * j0 - sp.diff(lagrangian, d1) * j1
    arguments = (phi, d0, d1, m, g, j0, j1)
    return sp.lambdify(arguments, densities, "numpy"), sp.lambdify(arguments, momentum, "numpy")


def test_tilted_surface_matches_the_stress_flux():
    s = np.linspace(-2.0, 2.0, 17)
    slope = 0.4
    surface = SurfaceParameterization.tilted(s, slope)
    field = surface_field(s)
    spec = LagrangianSpec(mass=1.3, coupling=lambda x0, x1: 0.2 + 0.0 * x1)
    densities, momentum_of = stress_flux_oracle()
    arguments = (field.phi, field.phi_x0, field.phi_x1, 1.3, 0.2, 1.0, slope)

    momentum = conjugate_momentum(surface, field, spec)
    np.testing.assert_allclose(momentum, momentum_of(*arguments), rtol=0.0, atol=1e-13)
    h0, h1 = covariant_hamiltonian_densities(surface, field, momentum, spec)
    expected_h0, expected_h1 = densities(*arguments)
    np.testing.assert_allclose(h0, expected_h0, rtol=0.0, atol=1e-12)
    np.testing.assert_allclose(h1, expected_h1, rtol=0.0, atol=1e-12)


def test_surface_and_momentum_validation():
    s = np.linspace(-1.0, 1.0, 9)
    with pytest.raises(SpacelikeError):
        SurfaceParameterization.tilted(s, 1.0)
    with pytest.raises(ShapeMismatchError):
        SurfaceParameterization.flat(np.array([0.0, 1.0]))

    surface = SurfaceParameterization.flat(s)
    field = surface_field(s)
    spec = LagrangianSpec()
    with pytest.raises(InconsistentMomentumError):
        covariant_hamiltonian_densities(surface, field, conjugate_momentum(surface, field, spec) + 0.1, spec)
    with pytest.raises(ShapeMismatchError):
        conjugate_momentum(surface, surface_field(np.linspace(-1.0, 1.0, 5)), spec)


def test_trajectory_validation():
    with pytest.raises(ShapeMismatchError):
        Trajectory(np.linspace(0.0, 1.0, 5), np.zeros(4), np.zeros(4))


def test_classical_repository_round_trips(tmp_path):
    repository = CsvClassicalRepository()
    trajectory = solve_duffing(kicked(), (0.5, 0.1), 800)
    loaded = repository.load_trajectory(repository.save_trajectory(trajectory, tmp_path / "duffing.csv"))
    np.testing.assert_array_equal(loaded.q, trajectory.q)
    np.testing.assert_array_equal(loaded.times, trajectory.times)

    snapshot = solve_klein_gordon(cosine_mode(sites=16), LagrangianSpec(), 1.0, 10)
    restored = repository.load_lattice(repository.save_lattice(snapshot, tmp_path / "lattice.csv"))
    assert restored.time == snapshot.time
    assert restored.spacing == snapshot.spacing
    np.testing.assert_array_equal(restored.phi, snapshot.phi)
    np.testing.assert_array_equal(restored.pi, snapshot.pi)

    batch = solve_duffing(kicked(), (np.zeros(2), np.ones(2)), 800)
    with pytest.raises(SerializationError):
        repository.save_trajectory(batch, tmp_path / "batch.csv")


@pytest.mark.slow
def test_conjugated_position_and_momentum_approach_the_classical_map():
    potential = PotentialSpec(-4.0, 4.0, quartic=PulseTrain((GaussianPulse(0.0, 0.5, 0.1),)))
    report = classical_limit_study(potential, hbars=(0.4, 0.2), half_extent=4.0, classical_steps=4000)
    assert report.points == [26, 52]
    assert report.errors[1] < report.errors[0] < 1e-2
    assert report.slope > 1.0 - 0.2
    assert [row["hbar"] for row in report.rows()] == [0.4, 0.2]
