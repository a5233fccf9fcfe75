"""
Acceptance suites. Each suite turns one validated scenario into a list of
checks; the runner only assembles and stores them.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Tuple

import numpy as np
import sympy

from src.app.classical.domain.duffing import DuffingParams
from src.app.classical.domain.lattice import FieldData, LagrangianSpec, LatticeField, SurfaceParameterization
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
from src.app.classical.service.functionals import hamilton_rates
from src.app.classical.service.klein_gordon import energy_drift, lattice_force, lattice_frequency, solve_klein_gordon
from src.app.dynamics.domain.hamiltonian import ConfinementWindow, QuadraticHamiltonian
from src.app.dynamics.domain.potential import GaussianPulse, PotentialSpec, PulseTrain
from src.app.dynamics.domain.route import ScatteringRoute
from src.app.dynamics.service.closed_form import driven_oscillator_closed_form
from src.app.dynamics.service.hilbert_route import minimum_hilbert_steps
from src.app.dynamics.service.properties import (
    causality_residual,
    route_convergence_study,
    scattering_operator,
    window_shift_consistency,
)
from src.app.green.domain.source_pulse import SourcePulse
from src.app.green.service.green_functions import feynman_moment_check
from src.app.moyal.domain.star_method import BandLimitPolicy
from src.app.moyal.service.diagnostics import (
    associativity_defect,
    correspondence_defect,
    hbar_scaling_study,
    method_agreement,
    smooth_test_pair,
)
from src.app.moyal.service.star import unitarity_defect
from src.app.perturbation.domain.contraction_kernel import (
    feynman_kernel,
    pv_timeordered_kernel,
    symmetric_part_kernel,
)
from src.app.perturbation.domain.functional_polynomial import FunctionalPolynomial
from src.app.perturbation.domain.time_grid import TimeGrid
from src.app.perturbation.service.algebra import (
    ordinary_product_orders,
    star_dyson_orders,
    wick_contract,
    wick_expand_orders,
)
from src.app.perturbation.service.energy import kernel_energy_transform
from src.app.phase_space.domain.grid import PhaseSpaceGrid
from src.app.phase_space.domain.symbol import Symbol
from src.app.phase_space.service.weyl import interior_mask, symbol_from_function, weyl_quantize, weyl_symbol_of
from src.app.scenarios.domain.check_result import CheckResult
from src.app.scenarios.domain.scenario_config import ScenarioConfig, SuiteName
from src.app.utils.logger import get_logger

logger = get_logger(__name__)

ROUND_TRIP_SAMPLES = 50
METHOD_AGREEMENT_HBAR = 0.1
SERIES_ORDER = 8
JACOBIAN_STARTS = (-1.0, 0.0, 1.0)

# used by the covariant suite when the scenario carries no pulses of that kind
DEFAULT_SOURCE = GaussianPulse(0.0, 0.5, 1.0)
DEFAULT_QUARTIC = GaussianPulse(0.0, 0.5, 0.1)


@dataclass
class SuiteContext:
    tolerances: Mapping[str, float]
    confinement: ConfinementWindow = field(default_factory=ConfinementWindow)
    max_workers: int = 1
    limit_half_extent: float = 4.0
    band_limit: BandLimitPolicy = BandLimitPolicy.WARN


SuiteFunction = Callable[[ScenarioConfig, SuiteContext], List[CheckResult]]


@dataclass(frozen=True)
class Suite:
    name: SuiteName
    description: str
    run: SuiteFunction


def _random_band_limited(grid: PhaseSpaceGrid, rng: np.random.Generator) -> Symbol:
    """Complex symbol whose Fourier modes all lie below half-Nyquist."""
    n = grid.points
    modes = np.abs(np.fft.fftfreq(n, 1.0 / n))
    inside = (modes[:, None] < n // 4) & (modes[None, :] < n // 4)
    count = int(np.count_nonzero(inside))
    coefficients = np.zeros((n, n), dtype=complex)
    coefficients[inside] = rng.standard_normal(count) + 1j * rng.standard_normal(count)
    values = np.fft.ifft2(coefficients)
    return Symbol(grid, values / np.max(np.abs(values)))


def _gaussians(grid: PhaseSpaceGrid) -> Tuple[Symbol, Symbol, Symbol]:
    f = symbol_from_function(grid, lambda q, p: np.exp(-((q - 0.5) ** 2 + p ** 2) / 2.0))
    g = symbol_from_function(grid, lambda q, p: (1.0 + 0.5 * q) * np.exp(-(q ** 2 + (p - 0.5) ** 2) / 2.0))
    h = symbol_from_function(grid, lambda q, p: np.exp(-((q + 0.3) ** 2 + (p + 0.4) ** 2) / 3.0 + 0.2j * q))
    return f, g, h


def run_algebra(scenario: ScenarioConfig, context: SuiteContext) -> List[CheckResult]:
    tol = context.tolerances
    grid = scenario.grid.build()
    rng = np.random.default_rng(0)
    worst = 0.0
    for _ in range(ROUND_TRIP_SAMPLES):
        symbol = _random_band_limited(grid, rng)
        worst = max(worst, (weyl_symbol_of(weyl_quantize(symbol)) - symbol).sup_norm())

    f, g, h = _gaussians(grid)
    small_f, small_g = smooth_test_pair(METHOD_AGREEMENT_HBAR)
    series_gap = method_agreement(small_f, small_g, SERIES_ORDER, interior_mask(small_f.grid, 3.0))
    scaling = hbar_scaling_study(scenario.grid.hbars)
    return [
        CheckResult.upper_bound("round_trip", worst, tol["round_trip"]),
        CheckResult.upper_bound("correspondence", correspondence_defect(f, g), tol["correspondence"]),
        CheckResult.upper_bound("associativity", associativity_defect(f, g, h), tol["associativity"]),
        CheckResult.upper_bound("method_agreement", series_gap, tol["method_agreement"]),
        CheckResult.slope("star_slope", scaling.star_slope, 1.0, tol["star_slope"], scaling.rows()),
        CheckResult.slope("bracket_slope", scaling.bracket_slope, 2.0, tol["bracket_slope"], scaling.rows()),
    ]


def _hilbert_steps(hamiltonian, potential, grid, requested: int, tolerances) -> int:
    if potential.is_zero:
        return requested
    return max(requested, minimum_hilbert_steps(hamiltonian, potential, grid, tolerances=tolerances))


def run_scattering(scenario: ScenarioConfig, context: SuiteContext) -> List[CheckResult]:
    tol = context.tolerances
    grid = scenario.grid.build()
    hamiltonian = QuadraticHamiltonian.oscillator(scenario.mass)
    potential = scenario.potential.build(context.confinement)
    mask = context.confinement.comparison_mask(hamiltonian, grid)
    steps = scenario.scattering.steps
    hilbert_steps = _hilbert_steps(hamiltonian, potential, grid, steps, tol)

    s_hilbert = scattering_operator(ScatteringRoute.HILBERT, hamiltonian, potential, grid, hilbert_steps, tol)
    s_star = scattering_operator(ScatteringRoute.STAR, hamiltonian, potential, grid, steps, tol, context.band_limit)
    checks = [
        CheckResult.upper_bound("unitarity_hilbert", unitarity_defect(s_hilbert, mask), tol["unitarity_hilbert"]),
        CheckResult.upper_bound("unitarity_star", unitarity_defect(s_star, mask), tol["unitarity_star"]),
        CheckResult.upper_bound("route_agreement", (s_hilbert - s_star).sup_norm(mask), tol["route_agreement"]),
    ]

    if potential.quartic.is_zero and not potential.source.is_zero:
        constants = driven_oscillator_closed_form(potential.source, potential.start, potential.end, scenario.mass)
        miss = (s_star - constants.symbol(grid)).sup_norm(mask)
        checks.append(CheckResult.upper_bound("closed_form", miss, tol["closed_form"]))

    ladder = scenario.scattering.convergence_steps
    if ladder:
        factor = int(np.ceil(hilbert_steps / min(ladder)))
        hilbert = route_convergence_study(
            ScatteringRoute.HILBERT, hamiltonian, potential, grid, [n * factor for n in ladder], mask, tol
        )
        star = route_convergence_study(ScatteringRoute.STAR, hamiltonian, potential, grid, ladder, mask, tol)
        checks.append(
            CheckResult.slope("hilbert_order", hilbert.order, 2.0, tol["hilbert_order_slope"], hilbert.rows())
        )
        checks.append(CheckResult.slope("star_order", star.order, 4.0, tol["star_order_slope"], star.rows()))

    shift = scenario.scattering.window_shift
    if shift is not None:
        residual = window_shift_consistency(hamiltonian, potential, grid, shift, steps, ScatteringRoute.STAR, mask)
        checks.append(CheckResult.upper_bound("window_shift", residual, tol["window_shift"]))
    return checks


def run_causality(scenario: ScenarioConfig, context: SuiteContext) -> List[CheckResult]:
    tol = context.tolerances
    grid = scenario.grid.build()
    hamiltonian = QuadraticHamiltonian.oscillator(scenario.mass)
    late_a = scenario.potential.build(context.confinement)
    window = (late_a.start, late_a.end)
    alternate = PulseTrain(tuple(p.to_pulse() for p in scenario.causality.alternate))
    early = PulseTrain(tuple(p.to_pulse() for p in scenario.causality.early))
    late_b = late_a + PotentialSpec(*window, quartic=alternate, confinement=context.confinement)
    perturbation = PotentialSpec(*window, source=early, confinement=context.confinement)

    steps = _hilbert_steps(hamiltonian, late_b + perturbation, grid, scenario.scattering.steps, tol)
    mask = context.confinement.comparison_mask(hamiltonian, grid)
    residual = causality_residual(
        hamiltonian, late_a, late_b, perturbation, grid, steps, ScatteringRoute.HILBERT, mask
    )
    return [CheckResult.upper_bound("causality", residual, tol["causality"])]


def run_green(scenario: ScenarioConfig, context: SuiteContext) -> List[CheckResult]:
    tol = context.tolerances
    settings = scenario.green
    grid = scenario.grid.build()
    hamiltonian = QuadraticHamiltonian.oscillator(scenario.mass)
    base = scenario.potential.build(context.confinement)
    steps = scenario.scattering.steps
    if settings.route == ScatteringRoute.HILBERT.value:
        strongest = PulseTrain()
        for t in settings.times:
            strongest = strongest + SourcePulse(t, min(settings.sigmas), max(settings.epsilons)).as_train()
        strongest_run = base.with_source(base.source + strongest)
        steps = _hilbert_steps(hamiltonian, strongest_run, grid, steps, tol)

    report = feynman_moment_check(
        settings.times,
        base,
        hamiltonian,
        grid,
        steps,
        mass=scenario.mass,
        epsilons=settings.epsilons,
        sigmas=settings.sigmas,
        route=settings.route,
        max_workers=context.max_workers,
        tolerances=tol,
    )
    rows = [row.to_dict() for row in report.rows]
    checks = [CheckResult.upper_bound("permutation", report.permutation_defect, tol["green_second_order"], rows)]
    if report.first_order_residual is not None:
        checks.append(
            CheckResult.upper_bound("first_order_oracle", report.first_order_residual, tol["green_first_order"])
        )
    if report.oracle_residual is not None:
        checks.append(
            CheckResult.upper_bound("second_order_oracle", report.oracle_residual, tol["green_second_order"])
        )
        checks.append(CheckResult.upper_bound("moment", report.moment_residual, tol["green_second_order"]))
    if report.epsilon_slope is not None:
        checks.append(CheckResult.slope("epsilon_slope", report.epsilon_slope, 2.0, tol["epsilon_slope"]))
    if report.quartic_shift_error is not None:
        checks.append(CheckResult.upper_bound("quartic_shift", report.quartic_shift_error, tol["quartic_shift"]))
    return checks


def _expected_linear_terms(samples: np.ndarray, weights: np.ndarray, degree: int, max_degree: int) -> FunctionalPolynomial:
    """(1 / i hbar) sum_i w_i c_i q(t_i)^degree / degree! for the quadrature nodes."""
    scale = 1.0 / 24.0 if degree == 4 else 1.0
    expected = FunctionalPolynomial.zero(max_degree)
    for node, (value, weight) in enumerate(zip(samples, weights)):
        expected.add_term(-1, (node,) * degree, -1j * weight * value * scale)
    return expected


def run_pv_kernel(scenario: ScenarioConfig, context: SuiteContext) -> List[CheckResult]:
    tol = context.tolerances
    settings = scenario.pv_kernel
    potential = scenario.potential.build(context.confinement)
    time_grid = TimeGrid(potential.start, potential.end, settings.nodes)
    n_g, n_j = settings.orders
    max_degree = 4 * n_g + n_j
    orders = (n_g, n_j)
    mass = scenario.mass

    dyson = star_dyson_orders(potential.quartic, potential.source, time_grid, mass, orders, max_degree)
    pv = pv_timeordered_kernel(mass, time_grid)
    wick = wick_expand_orders(potential.quartic, potential.source, pv, orders, max_degree)
    gap = max(dyson[order].max_difference(wick.get(order, FunctionalPolynomial.zero(max_degree))) for order in dyson)
    checks = [CheckResult.upper_bound("dyson_wick_equivalence", gap, tol["wick_equivalence"])]

    zero = FunctionalPolynomial.zero(max_degree)
    weights = time_grid.weights
    if n_g >= 1:
        expected = _expected_linear_terms(time_grid.sample(potential.quartic), weights, 4, max_degree)
        miss = dyson.get((1, 0), zero).max_difference(expected)
        checks.append(CheckResult.upper_bound("quartic_linear_term", miss, tol["machine"]))
    if n_j >= 1:
        expected = _expected_linear_terms(time_grid.sample(potential.source), weights, 1, max_degree)
        miss = dyson.get((0, 1), zero).max_difference(expected)
        checks.append(CheckResult.upper_bound("source_linear_term", miss, tol["machine"]))
    if n_j >= 2:
        product = ordinary_product_orders(potential.quartic, potential.source, time_grid, orders, max_degree)[(0, 2)]
        feynman_minus_pv = wick_contract(product, feynman_kernel(mass, time_grid)) - wick_contract(product, pv)
        symmetric = wick_contract(product, symmetric_part_kernel(mass, time_grid)) - product
        checks.append(
            CheckResult.upper_bound(
                "feynman_minus_pv", feynman_minus_pv.max_difference(symmetric), tol["wick_equivalence"]
            )
        )

    transform = kernel_energy_transform(pv, settings.energies, exclude_singular=True)
    checks.append(
        CheckResult.upper_bound("pv_transform", transform.pv_relative_error, tol["pv_relative"], transform.rows())
    )
    if transform.zero_energy_error is not None:
        checks.append(CheckResult.upper_bound("pv_zero_energy", transform.zero_energy_error, tol["pv_zero_energy"]))
    return checks


def run_classical_limit(scenario: ScenarioConfig, context: SuiteContext) -> List[CheckResult]:
    tol = context.tolerances
    potential = scenario.potential.build(context.confinement)
    steps = scenario.covariant.duffing_steps
    report = classical_limit_study(
        potential,
        scenario.grid.hbars,
        scenario.mass,
        half_extent=context.limit_half_extent,
        classical_steps=steps,
        tolerances=tol,
    )
    checks = [
        CheckResult.lower_bound(
            "classical_limit", report.slope, 1.0 - tol["classical_limit_slope"], report.rows()
        )
    ]

    params = DuffingParams.from_potential(potential, scenario.mass)
    jacobians = {
        (q0, p0): scattering_map_jacobian(params, (q0, p0), steps, tolerances=tol)
        for q0 in JACOBIAN_STARTS
        for p0 in JACOBIAN_STARTS
    }
    defects = [
        {"q0": q0, "p0": p0, "det_defect": symplectic_defect(jacobian)} for (q0, p0), jacobian in jacobians.items()
    ]
    worst = max(row["det_defect"] for row in defects)
    checks.append(CheckResult.upper_bound("map_symplectic", worst, tol["map_symplectic"], defects))

    if potential.quartic.is_zero and not potential.source.is_zero:
        translation = max(float(np.max(np.abs(j - np.eye(2)))) for j in jacobians.values())
        checks.append(CheckResult.upper_bound("map_translation_jacobian", translation, tol["map_jacobian"]))
        dq, dp = driven_oscillator_closed_form(
            potential.source, potential.start, potential.end, scenario.mass
        ).classical_shift
        mapped_q, mapped_p = classical_scattering_map(params, (0.0, 0.0), steps, tol)
        miss = max(abs(float(mapped_q) - dq), abs(float(mapped_p) - dp))
        checks.append(CheckResult.upper_bound("map_translation", miss, tol["closed_form"]))
    return checks


def _symbolic_densities(mass: float) -> Callable:
    """
    (pi, H0, H1) along a surface from the Lagrangian by computer algebra; inputs
    are (phi, phi_x0, phi_x1, dx0/ds, dx1/ds).
    """
    phi, a, b, x0_s, x1_s = sympy.symbols("phi a b x0_s x1_s", real=True)
    lagrangian = (a ** 2 - b ** 2 - mass ** 2 * phi ** 2) / 2
    l_a, l_b = sympy.diff(lagrangian, a), sympy.diff(lagrangian, b)
    momentum = l_a * x1_s - l_b * x0_s
    h0 = -l_b * a * x0_s + (l_a * a - lagrangian) * x1_s
    h1 = l_a * b * x1_s - (l_b * b - lagrangian) * x0_s
    return sympy.lambdify((phi, a, b, x0_s, x1_s), (momentum, h0, h1), "numpy")


def _covariant_checks(scenario: ScenarioConfig, tol: Mapping[str, float]) -> List[CheckResult]:
    settings = scenario.covariant.surface
    spec = LagrangianSpec(mass=scenario.mass)
    s = np.linspace(-settings.extent, settings.extent, settings.nodes)

    flat = SurfaceParameterization.flat(s)
    rate = 0.5 * np.cos(2.0 * s)
    field = FieldData(np.sin(s), rate, np.cos(s))
    momentum = conjugate_momentum(flat, field, spec)
    h0, h1 = covariant_hamiltonian_densities(flat, field, momentum, spec, tol)
    phi_s = field.along(flat)
    flat_gap = max(
        float(np.max(np.abs(momentum - rate))),
        float(np.max(np.abs(h0 - 0.5 * (momentum ** 2 + phi_s ** 2 + spec.mass ** 2 * field.phi ** 2)))),
        float(np.max(np.abs(h1 - momentum * phi_s))),
    )

    if settings.kind == "tilted":
        surface = SurfaceParameterization.tilted(s, settings.slope)
    else:
        surface = flat
    phi = 0.3 + 0.7 * surface.x0 - 0.4 * surface.x1
    gradient = FieldData(phi, np.full(s.shape, 0.7), np.full(s.shape, -0.4))
    momentum = conjugate_momentum(surface, gradient, spec)
    h0, h1 = covariant_hamiltonian_densities(surface, gradient, momentum, spec, tol)
    oracle = _symbolic_densities(spec.mass)(phi, gradient.phi_x0, gradient.phi_x1, surface.x0_s, surface.x1_s)
    surface_gap = max(
        float(np.max(np.abs(np.broadcast_to(expected, s.shape) - computed)))
        for expected, computed in zip(oracle, (momentum, h0, h1))
    )
    return [
        CheckResult.upper_bound("covariant_flat", flat_gap, tol["machine"]),
        CheckResult.upper_bound(f"covariant_{settings.kind}", surface_gap, tol["machine"]),
    ]


def _lattice_checks(scenario: ScenarioConfig, tol: Mapping[str, float]) -> List[CheckResult]:
    settings = scenario.covariant
    spec = LagrangianSpec(mass=scenario.mass)
    spacing = settings.lattice_length / settings.lattice_sites
    base = LatticeField.zeros(settings.lattice_sites, spacing)
    x = base.positions
    k = base.wavenumber(settings.mode)
    dt = settings.duration / settings.lattice_steps

    mode = LatticeField(np.cos(k * x), np.zeros(x.shape), spacing)
    final = solve_klein_gordon(mode, spec, settings.duration, settings.lattice_steps)
    omega = lattice_frequency(k, spacing, spec.mass, dt)
    dispersion = float(np.max(np.abs(final.phi - np.cos(omega * final.time) * np.cos(k * x))))

    standing = LatticeField(np.cos(k * x) + 0.5 * np.sin(base.wavenumber(1) * x), 0.3 * np.sin(k * x), spacing)
    drift = energy_drift(standing, spec, settings.duration, settings.lattice_steps)

    phi_rate, pi_rate = hamilton_rates(standing, spec)
    force = lattice_force(standing, spec)
    scale = max(float(np.max(np.abs(standing.pi))), float(np.max(np.abs(force))), 1.0)
    bracket_gap = max(float(np.max(np.abs(phi_rate - standing.pi))), float(np.max(np.abs(pi_rate - force)))) / scale
    forward = solve_klein_gordon(standing, spec, dt, 1)
    backward = solve_klein_gordon(standing, spec, -dt, 1)
    flow_gap = float(np.max(np.abs((forward.phi - backward.phi) / (2.0 * dt) - phi_rate)))
    return [
        CheckResult.upper_bound("kg_dispersion", dispersion, tol["kg_dispersion"]),
        CheckResult.upper_bound("kg_energy_drift", drift, tol["kg_energy_drift"]),
        CheckResult.upper_bound("hamilton_rates", bracket_gap, tol["machine"]),
        CheckResult.upper_bound("hamilton_flow", flow_gap, tol["kg_dispersion"]),
    ]


def _duffing_checks(scenario: ScenarioConfig, tol: Mapping[str, float]) -> List[CheckResult]:
    mass = scenario.mass
    steps = scenario.covariant.duffing_steps
    potential = scenario.potential
    period = 2.0 * np.pi / mass

    free = DuffingParams(mass, 0.0, period)
    orbit = solve_duffing(free, (np.array([1.0, 0.0]), np.array([0.0, 1.0])), steps, tol)
    q, p = orbit.final
    returned = float(np.max(np.abs(q - [1.0, 0.0]) + np.abs(p - [0.0, 1.0])))
    energy = orbit.energy(mass)
    conservation = float(np.max(np.abs(energy - energy[0])))
    virial = float(np.max(np.abs(evaluate_action(orbit, LagrangianSpec(mass=mass), free))))

    source = PulseTrain(tuple(pulse.to_pulse() for pulse in potential.source) or (DEFAULT_SOURCE,))
    quartic = PulseTrain(tuple(pulse.to_pulse() for pulse in potential.quartic) or (DEFAULT_QUARTIC,))
    driven = DuffingParams(mass, potential.start, potential.end, source=source)
    response = solve_duffing(driven, (0.5, 0.0), steps, tol)
    exact_q, exact_p = duhamel_response(driven, (0.5, 0.0), response.times[-1:])
    duhamel = max(abs(float(response.q[-1]) - exact_q[0]), abs(float(response.p[-1]) - exact_p[0]))

    kicked = DuffingParams(mass, potential.start, potential.end, quartic=quartic, source=source)
    work = work_energy_residual(solve_duffing(kicked, (1.0, 0.0), steps, tol), kicked)
    stationarity = action_stationarity_study(kicked, (1.0, 0.0), steps, tolerances=tol)
    return [
        CheckResult.upper_bound("harmonic_return", returned, tol["harmonic_return"]),
        CheckResult.upper_bound("energy_conservation", conservation, tol["energy_conservation"]),
        CheckResult.upper_bound("action_virial", virial, tol["action_virial"]),
        CheckResult.upper_bound("duhamel", duhamel, tol["duhamel"]),
        CheckResult.upper_bound("work_energy", work, tol["work_energy"]),
        CheckResult.slope("action_stationarity", stationarity.slope, 2.0, tol["action_slope"], stationarity.rows()),
    ]


def run_covariant(scenario: ScenarioConfig, context: SuiteContext) -> List[CheckResult]:
    tol = context.tolerances
    return _covariant_checks(scenario, tol) + _lattice_checks(scenario, tol) + _duffing_checks(scenario, tol)


SUITES: Dict[SuiteName, Suite] = {
    suite.name: suite
    for suite in (
        Suite(SuiteName.ALGEBRA, "Weyl round trips, star-product correspondence, associativity and hbar scaling", run_algebra),
        Suite(SuiteName.SCATTERING, "Unitarity and agreement of both scattering routes, convergence orders", run_scattering),
        Suite(SuiteName.CAUSALITY, "Insensitivity of S(Va) conj(S(Vb)) to perturbations before the split time", run_causality),
        Suite(SuiteName.GREEN, "Green functions from source pulses against the free oracle and moment identities", run_green),
        Suite(SuiteName.PV_KERNEL, "Star-Dyson series against Wick expansion with principal-value kernels", run_pv_kernel),
        Suite(SuiteName.CLASSICAL_LIMIT, "Heisenberg-picture symbols against the classical scattering map", run_classical_limit),
        Suite(SuiteName.COVARIANT, "Covariant densities, lattice Klein-Gordon and Duffing mechanics", run_covariant),
    )
}
