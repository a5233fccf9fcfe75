import numpy as np
import pytest

from src.app.config.default_settings import DEFAULT_TOLERANCES
from src.app.dynamics.domain.flow import SymplecticFlow
from src.app.dynamics.domain.hamiltonian import ConfinementWindow, QuadraticHamiltonian
from src.app.dynamics.domain.potential import GaussianPulse, PotentialSpec, PulseTrain
from src.app.dynamics.domain.route import ScatteringRoute
from src.app.dynamics.service.closed_form import driven_oscillator_closed_form
from src.app.dynamics.service.flow import free_flow, transport_symbol
from src.app.dynamics.service.hilbert_route import (
    coherent_fidelity,
    confinement_operator,
    evolve_hilbert,
    free_evolution_hilbert,
    free_propagator,
    hamiltonian_operator,
    interaction_shapes,
    minimum_hilbert_steps,
    scattering_operator_hilbert,
)
from src.app.dynamics.service.properties import (
    causality_residual,
    route_convergence_study,
    scattering_operator,
    window_shift_consistency,
)
from src.app.dynamics.service.star_route import scattering_operator_star
from src.app.moyal.service.star import unitarity_defect
from src.app.phase_space.domain.grid import balanced_grid
from src.app.phase_space.domain.symbol import OperatorMatrix
from src.app.phase_space.service.weyl import constant_symbol, symbol_from_function, weyl_symbol_of
from src.app.utils.errors import (
    PulseWindowError,
    StepResolutionError,
    SupportEscapeError,
    SymplecticError,
    WindowMismatchError,
)


def source_potential(start=-5.0, end=5.0, peak=0.3):
    return PotentialSpec(start, end, source=PulseTrain((GaussianPulse(0.0, 0.5, peak),)))


def test_oscillator_flow_is_a_rotation(oscillator):
    t = 0.7
    flow = free_flow(oscillator, t)
    expected = np.array([[np.cos(t), np.sin(t)], [-np.sin(t), np.cos(t)]])
    assert np.max(np.abs(flow.matrix - expected)) < 1e-12
    assert np.max(np.abs(flow.shift)) < 1e-12


def test_flows_compose_and_invert(oscillator):
    a, b = free_flow(oscillator, 0.4), free_flow(oscillator, 1.1)
    assert a.compose(b).distance(free_flow(oscillator, 1.5)) < 1e-12
    assert a.compose(a.inverse()).distance(SymplecticFlow.identity()) < 1e-12


def test_linear_term_shifts_the_fixed_point():
    shifted = QuadraticHamiltonian(np.eye(2), linear=np.array([1.0, 0.0]))
    q, p = free_flow(shifted, 2.3)(-1.0, 0.0)
    assert q == pytest.approx(-1.0, abs=1e-12)
    assert p == pytest.approx(0.0, abs=1e-12)


def test_flow_must_be_symplectic():
    with pytest.raises(SymplecticError):
        SymplecticFlow(np.diag([2.0, 1.0]))


def test_transport_composes_the_generator(small_grid, oscillator):
    t = 0.9
    position = symbol_from_function(small_grid, lambda q, p: q, real_observable=True)
    moved = transport_symbol(position, free_flow(oscillator, t))
    q, p = small_grid.mesh()
    assert np.max(np.abs(moved.values - (q * np.cos(t) + p * np.sin(t)))) < 1e-12


def test_transport_reports_support_escape(small_grid, oscillator):
    edge = small_grid.half_extent
    sampled = symbol_from_function(small_grid, lambda q, p: np.exp(-((q - 0.8 * edge) ** 2 + p ** 2)))
    sampled = sampled.with_values(sampled.values)
    with pytest.raises(SupportEscapeError):
        transport_symbol(sampled, free_flow(oscillator, 0.3))


def test_zero_potential_gives_unit_symbol(small_grid, oscillator):
    quiet = PotentialSpec(-1.0, 1.0)
    star_s = scattering_operator_star(oscillator, quiet, small_grid, steps=10)
    assert (star_s - constant_symbol(small_grid)).sup_norm() == 0.0

    steps = minimum_hilbert_steps(oscillator, quiet, small_grid)
    hilbert_s = scattering_operator_hilbert(oscillator, quiet, small_grid, steps)
    assert (hilbert_s - constant_symbol(small_grid)).sup_norm() < 1e-10


def test_star_route_matches_driven_oscillator_closed_form(oscillator):
    grid = balanced_grid(128, 1.0)
    potential = source_potential()
    s = scattering_operator_star(oscillator, potential, grid, steps=400)
    exact = driven_oscillator_closed_form(potential.source, potential.start, potential.end).symbol(grid)
    mask = potential.confinement.comparison_mask(oscillator, grid)
    assert np.count_nonzero(mask) > 0
    assert (s - exact).sup_norm(mask) < 1e-5


def test_closed_form_of_zero_source_is_identity():
    constants = driven_oscillator_closed_form(PulseTrain(), -1.0, 1.0)
    assert constants.classical_shift == (0.0, 0.0)
    assert constants.gamma == 0.0


def test_hilbert_evolution_is_unitary(small_grid, oscillator):
    potential = source_potential()
    steps = minimum_hilbert_steps(oscillator, potential, small_grid)
    u = evolve_hilbert(oscillator, potential, small_grid, steps)
    assert u.unitarity_defect() < 1e-10


def test_cayley_free_evolution_tracks_the_exponential(small_grid, oscillator):
    quiet = PotentialSpec(0.0, 0.5)
    steps = 4 * minimum_hilbert_steps(oscillator, quiet, small_grid)
    stepped = free_evolution_hilbert(oscillator, small_grid, 0.5, steps)
    exact = free_propagator(oscillator, small_grid, 0.5)
    assert exact.unitarity_defect() < 1e-10
    fidelity = coherent_fidelity(OperatorMatrix(small_grid, exact.adjoint().entries @ stepped.entries))
    assert fidelity[0] == pytest.approx(1.0, abs=1e-4)


def test_coarse_steps_are_rejected(small_grid, oscillator):
    potential = source_potential()
    with pytest.raises(StepResolutionError):
        scattering_operator_star(oscillator, potential, small_grid, steps=1)
    with pytest.raises(StepResolutionError):
        evolve_hilbert(oscillator, potential, small_grid, steps=1)


def test_star_route_converges_at_fourth_order(small_grid, oscillator):
    report = route_convergence_study(
        ScatteringRoute.STAR, oscillator, source_potential(), small_grid, steps=(80, 160, 320)
    )
    assert report.differences[0] > report.differences[1]
    assert report.order > 3.5
    assert [row["steps"] for row in report.rows()] == [80, 160]


def test_pulse_and_window_validation():
    with pytest.raises(PulseWindowError):
        GaussianPulse(0.0, 0.0, 1.0)
    with pytest.raises(PulseWindowError):
        PotentialSpec(1.0, 1.0)
    with pytest.raises(PulseWindowError):
        PotentialSpec(-3.0, 3.0, source=PulseTrain((GaussianPulse(2.9, 0.5, 1.0),)))
    with pytest.raises(PulseWindowError):
        PotentialSpec(-3.0, 3.0, general=lambda t, q, p: q)
    with pytest.raises(WindowMismatchError):
        source_potential() + PotentialSpec(-4.0, 4.0)


def test_window_shift_rejects_bad_shifts(small_grid, oscillator):
    with pytest.raises(PulseWindowError):
        window_shift_consistency(oscillator, source_potential(), small_grid, -1.0, steps=80)
    with pytest.raises(PulseWindowError):
        window_shift_consistency(oscillator, source_potential(), small_grid, 3.0, steps=80)


def test_confinement_fractions_are_validated():
    with pytest.raises(SupportEscapeError):
        ConfinementWindow(mid_fraction=0.05, compare_fraction=0.1)


def test_comparison_mask_sits_inside_the_plateau(grid, oscillator):
    window = ConfinementWindow()
    chi = window.cutoff(oscillator, grid)
    q, p = grid.mesh()
    mask = window.comparison_mask(oscillator, grid)
    assert np.max(np.abs(chi(q, p)[mask] - 1.0)) < 1e-12
    assert np.max(chi(q, p)[0, :]) < 1e-6


def quartic_potential(start=-6.0, end=6.0, center=0.0, peak=0.1):
    return PotentialSpec(start, end, quartic=PulseTrain((GaussianPulse(center, 0.5, peak),)))


def test_interaction_shapes_are_hermitian_and_commute_with_h0(small_grid, oscillator):
    potential = quartic_potential()
    shapes = interaction_shapes(oscillator, potential, small_grid)
    assert shapes.quartic.hermiticity_defect() < 1e-12 * np.max(np.abs(shapes.quartic.entries))
    assert shapes.source.hermiticity_defect() < 1e-12 * np.max(np.abs(shapes.source.entries))

    root = confinement_operator(oscillator, potential.confinement, small_grid).entries
    h0 = hamiltonian_operator(oscillator, small_grid).entries
    assert np.max(np.abs(root @ h0 - h0 @ root)) < 1e-9 * np.max(np.abs(h0))
    mask = potential.confinement.comparison_mask(oscillator, small_grid)
    chi = weyl_symbol_of(OperatorMatrix(small_grid, root @ root), real_observable=True)
    assert np.max(np.abs(chi.values[mask] - 1.0)) < 1e-6


def test_hilbert_route_converges_at_second_order(small_grid, oscillator):
    potential = source_potential()
    base = minimum_hilbert_steps(oscillator, potential, small_grid)
    mask = potential.confinement.comparison_mask(oscillator, small_grid)
    report = route_convergence_study(
        ScatteringRoute.HILBERT, oscillator, potential, small_grid, steps=(base, 2 * base, 4 * base), mask=mask
    )
    assert report.order == pytest.approx(2.0, abs=DEFAULT_TOLERANCES["hilbert_order_slope"])


@pytest.mark.slow
def test_routes_agree_on_a_quartic_pulse(grid, oscillator):
    potential = quartic_potential()
    mask = potential.confinement.comparison_mask(oscillator, grid)
    hilbert_steps = max(400, minimum_hilbert_steps(oscillator, potential, grid))
    s_hilbert = scattering_operator(ScatteringRoute.HILBERT, oscillator, potential, grid, hilbert_steps)
    s_star = scattering_operator(ScatteringRoute.STAR, oscillator, potential, grid, 400)
    assert (s_hilbert - s_star).sup_norm(mask) < DEFAULT_TOLERANCES["route_agreement"]
    assert unitarity_defect(s_hilbert, mask) < DEFAULT_TOLERANCES["unitarity_hilbert"]
    assert unitarity_defect(s_star, mask) < DEFAULT_TOLERANCES["unitarity_star"]


@pytest.mark.slow
def test_window_shift_matches_the_free_transport(grid, oscillator):
    potential = quartic_potential()
    mask = potential.confinement.comparison_mask(oscillator, grid)
    residual = window_shift_consistency(oscillator, potential, grid, 0.5, steps=400, mask=mask)
    assert residual < DEFAULT_TOLERANCES["window_shift"]


@pytest.mark.slow
def test_late_changes_leave_the_early_perturbation_invisible(grid, oscillator):
    late_a = quartic_potential(center=2.0)
    late_b = late_a + quartic_potential(center=3.0)
    early = PotentialSpec(-6.0, 6.0, source=PulseTrain((GaussianPulse(-3.0, 0.3, 0.5),)))
    steps = minimum_hilbert_steps(oscillator, late_b + early, grid)
    mask = late_a.confinement.comparison_mask(oscillator, grid)
    residual = causality_residual(oscillator, late_a, late_b, early, grid, steps, mask=mask)
    assert residual < DEFAULT_TOLERANCES["causality"]
