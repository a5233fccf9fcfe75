"""
Operator Green functions as functional derivatives of S(j) at j = 0, realized
by central differences in the amplitudes of smoothed source pulses.
"""
import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.app.config.core import resolve_tolerances
from src.app.dynamics.domain.hamiltonian import QuadraticHamiltonian
from src.app.dynamics.domain.potential import PotentialSpec, PulseTrain
from src.app.dynamics.service.properties import scattering_operator
from src.app.green.domain.green_request import ConvergenceRow, GreenRequest, GreenResult
from src.app.green.domain.source_pulse import SourcePulse
from src.app.green.service.extrapolation import extrapolate
from src.app.moyal.service.diagnostics import loglog_slope
from src.app.perturbation.domain.contraction_kernel import KernelName, kernel_generator, pauli_jordan_kernel
from src.app.perturbation.domain.functional_polynomial import FunctionalPolynomial
from src.app.perturbation.domain.time_grid import TimeGrid
from src.app.perturbation.service.algebra import star_dyson_orders, star_functionals
from src.app.perturbation.service.realization import evaluate_on_phase_space
from src.app.phase_space.domain.grid import PhaseSpaceGrid
from src.app.phase_space.domain.symbol import Symbol
from src.app.utils.errors import ConvergenceError, PulseWindowError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)


def _relative(difference: np.ndarray, reference: np.ndarray, mask: np.ndarray) -> float:
    scale = float(np.max(np.abs(reference[mask]))) if np.any(mask) else 0.0
    error = float(np.max(np.abs(difference[mask]))) if np.any(mask) else 0.0
    return error / scale if scale > 0 else error


def _sourced(request: GreenRequest, signs: Tuple[int, ...], epsilon: float, sigma: float, tail: float) -> PotentialSpec:
    train = PulseTrain()
    for t, sign in zip(request.times, signs):
        pulse = SourcePulse(t, sigma, sign * epsilon)
        pulse.validate(request.base.start, request.base.end, tail)
        train = train + pulse.as_train()
    return request.base.with_source(request.base.source + train)


def green_function(
    request: GreenRequest,
    max_workers: int = 1,
    tolerances: Optional[Mapping[str, float]] = None,
) -> GreenResult:
    """
    Estimate d^N S / dj(t_1)..dj(t_N) at j = 0.

    For every (sigma, epsilon) the 2^N sign combinations of the pulse amplitudes
    are run and combined into the mixed central difference, whose error is even
    in epsilon. With extrapolation on, a Neville tableau in epsilon^2 is applied
    per sigma, then one in sigma^2.

    Args:
        request (GreenRequest): insertion times, base potential and ladders
        max_workers (int): concurrent scattering runs
        tolerances (Optional[Mapping[str, float]]): overrides of the default table

    Returns:
        GreenResult: symbol with convergence rows and the epsilon-scaling slope

    Raises:
        ConvergenceError: If the sigma extrapolation misses the Cauchy criterion.
        PulseWindowError: If a source pulse leaks out of the time window.
    """
    tolerances = resolve_tolerances(tolerances)
    grid = request.grid
    mask = request.base.confinement.comparison_mask(request.hamiltonian, grid)
    n = request.order
    sign_patterns = list(itertools.product((1, -1), repeat=n))
    epsilons = [e for e in request.epsilons if e != 0.0]
    live = [(sigma, epsilon) for sigma in request.sigmas for epsilon in epsilons]
    potentials = [
        _sourced(request, signs, epsilon, sigma, tolerances["pulse_tail"])
        for sigma, epsilon in live
        for signs in sign_patterns
    ]

    def run(potential: PotentialSpec) -> Symbol:
        return scattering_operator(request.route, request.hamiltonian, potential, grid, request.steps, tolerances)

    started = time.perf_counter()
    logger.info(f"Green function N={n} at t={request.times}: {len(potentials)} scattering runs on {max_workers} workers")
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        symbols = list(executor.map(run, potentials))
    logger.info(f"Scattering runs finished in {time.perf_counter() - started:.2f}s")

    differences = {}
    chunk = len(sign_patterns)
    for index, (sigma, epsilon) in enumerate(live):
        runs = symbols[index * chunk:(index + 1) * chunk]
        total = sum(np.prod(signs) * s.values for signs, s in zip(sign_patterns, runs))
        differences[(sigma, epsilon)] = total / (2.0 * epsilon) ** n

    zero = np.zeros((grid.points, grid.points), dtype=complex)
    per_sigma = []
    for sigma in request.sigmas:
        estimates = [differences[(sigma, e)] for e in epsilons]
        if not estimates:
            per_sigma.append(zero)
        elif request.extrapolate and len(estimates) > 1:
            per_sigma.append(extrapolate(epsilons, estimates, mask=mask)[0])
        else:
            per_sigma.append(estimates[-1])

    cauchy_error = 0.0
    if len(request.sigmas) > 1:
        if request.extrapolate:
            final, error = extrapolate(request.sigmas, per_sigma, mask=mask)
        else:
            final = per_sigma[-1]
            error = float(np.max(np.abs(per_sigma[-1] - per_sigma[-2])[mask]))
        scale = float(np.max(np.abs(final[mask])))
        cauchy_error = error / scale if scale > 0 else error
    else:
        final = per_sigma[-1]
        logger.warning("single sigma level: the Cauchy criterion is not evaluated")
    if cauchy_error > tolerances["cauchy_relative"]:
        logger.error(f"Green function estimates fail the Cauchy criterion: {cauchy_error:.3e}")
        raise ConvergenceError(
            f"relative spread {cauchy_error:.3e} of the sigma extrapolation exceeds {tolerances['cauchy_relative']}"
        )

    def row(epsilon: float, sigma: float, estimate: np.ndarray) -> ConvergenceRow:
        norm = float(np.max(np.abs(estimate[mask]))) if np.any(mask) else 0.0
        return ConvergenceRow(epsilon, sigma, norm, _relative(estimate - final, final, mask))

    rows = [row(epsilon, sigma, estimate) for (sigma, epsilon), estimate in differences.items()]
    rows += [row(0.0, sigma, estimate) for sigma, estimate in zip(request.sigmas, per_sigma)]
    rows.append(row(0.0, 0.0, final))

    epsilon_slope = None
    if request.extrapolate and len(epsilons) >= 3:
        sigma = request.sigmas[-1]
        reference = per_sigma[-1]
        errors = [float(np.max(np.abs(differences[(sigma, e)] - reference)[mask])) for e in epsilons[:-1]]
        epsilon_slope = loglog_slope(epsilons[:-1], errors)

    return GreenResult(Symbol(grid, final), rows, cauchy_error, epsilon_slope, mask)


def quadratic_green_oracle(
    times: Sequence[float],
    grid: PhaseSpaceGrid,
    mass: float,
    reference_time: float,
) -> Symbol:
    """
    Exact Green function of the free oscillator (V0 = 0) from the functional
    algebra: (1 / i hbar)^N times the time-ordered star product of q(t_i).
    """
    times = [float(t) for t in times]
    if len(times) == 1:
        nodes = TimeGrid(times[0], times[0] + 1.0, 2)
        polynomial = FunctionalPolynomial.field_at(0, 1).scale(-1j, hbar_shift=-1)
    elif len(times) == 2:
        earlier, later = sorted(times)
        nodes = TimeGrid(earlier, later, 2)
        kernel = pauli_jordan_kernel(mass, nodes)
        ordered = star_functionals(FunctionalPolynomial.field_at(1, 2), FunctionalPolynomial.field_at(0, 2), kernel)
        polynomial = ordered.scale(-1.0, hbar_shift=-2)
    else:
        raise PulseWindowError(f"oracle available for one or two insertions, got {len(times)}")
    return evaluate_on_phase_space(polynomial, nodes, grid, mass, reference_time)


def quartic_shift_prediction(
    base: PotentialSpec,
    time: float,
    grid: PhaseSpaceGrid,
    mass: float,
    spacing: float = 0.1,
) -> Symbol:
    """
    First order in g of dS / dj(t) at j = 0, from the star-Dyson component (1, 1)
    with a unit spike on the node sitting at t.
    """
    offset = time - base.start
    per_offset = max(int(np.ceil(offset / spacing)), 1)
    h = offset / per_offset
    nodes = 1 + int(np.ceil(base.duration / h - 1e-9))
    time_grid = TimeGrid(base.start, base.start + (nodes - 1) * h, nodes)
    spike = np.zeros(nodes)
    spike[per_offset] = 1.0 / time_grid.weights[per_offset]
    component = star_dyson_orders(base.quartic, spike, time_grid, mass, (1, 1), 5)[(1, 1)]
    return evaluate_on_phase_space(component, time_grid, grid, mass)


@dataclass
class MomentReport:
    """
    Moment-level checks on the Green functions of two insertion times.

    Attributes:
        permutation_defect (float): sup |G(t1, t2) - G(t2, t1)| on the comparison mask
        moment_residual (float): sup |G2 - G1(t1) G1(t2) - (1 / i hbar)^2 hbar C_pv(t1, t2)|
        first_order_residual (Optional[float]): max over t1, t2 of sup |G1 - q_I / (i hbar)| when V0 = 0
        oracle_residual (Optional[float]): sup |G2 - exact free G2| when V0 = 0
        quartic_shift_error (Optional[float]): relative miss of the first-order-in-g shift of G1(t1)
        epsilon_slope (Optional[float]): log-log slope of the two-insertion finite-difference error in epsilon
    """
    times: Tuple[float, float]
    permutation_defect: float
    moment_residual: float
    first_order_residual: Optional[float] = None
    oracle_residual: Optional[float] = None
    quartic_shift_error: Optional[float] = None
    epsilon_slope: Optional[float] = None
    rows: List[ConvergenceRow] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "times": list(self.times),
            "permutation_defect": self.permutation_defect,
            "moment_residual": self.moment_residual,
            "first_order_residual": self.first_order_residual,
            "oracle_residual": self.oracle_residual,
            "quartic_shift_error": self.quartic_shift_error,
            "epsilon_slope": self.epsilon_slope,
        }


def feynman_moment_check(
    times: Tuple[float, float],
    base: PotentialSpec,
    hamiltonian: QuadraticHamiltonian,
    grid: PhaseSpaceGrid,
    steps: int,
    mass: float = 1.0,
    epsilons: Sequence[float] = (0.2, 0.1, 0.05),
    sigmas: Sequence[float] = (0.4, 0.2, 0.1),
    route: str = "star",
    max_workers: int = 1,
    tolerances: Optional[Mapping[str, float]] = None,
) -> MomentReport:
    """
    Green functions as moments: symmetry under (t1, t2) swap, factorization of
    the second moment into first moments plus the contraction kernel in the
    free case, and the first-order quartic shift of the first moment.
    """
    if len(times) != 2:
        raise PulseWindowError(f"moment check needs two insertion times, got {len(times)}")
    t1, t2 = (float(t) for t in times)

    def request(insertions, potential=base) -> GreenRequest:
        return GreenRequest(
            times=tuple(insertions),
            base=potential,
            hamiltonian=hamiltonian,
            grid=grid,
            steps=steps,
            epsilons=tuple(epsilons),
            sigmas=tuple(sigmas),
            route=route,
        )

    forward = green_function(request((t1, t2)), max_workers, tolerances)
    backward = green_function(request((t2, t1)), max_workers, tolerances)
    first = green_function(request((t1,)), max_workers, tolerances)
    second = green_function(request((t2,)), max_workers, tolerances)
    mask = forward.mask
    hbar = grid.hbar

    pv = complex(kernel_generator(KernelName.PV_TIMEORDERED, mass)(t1, t2))
    contraction = -pv / hbar
    connected = forward.symbol.values - first.symbol.values * second.symbol.values - contraction
    report = MomentReport(
        times=(t1, t2),
        permutation_defect=(forward.symbol - backward.symbol).sup_norm(mask),
        moment_residual=Symbol(grid, connected).sup_norm(mask),
        epsilon_slope=forward.epsilon_slope,
        rows=forward.rows,
    )

    free = base.quartic.is_zero and base.general is None
    if free:
        oracle = quadratic_green_oracle((t1, t2), grid, mass, base.start)
        report.oracle_residual = (forward.symbol - oracle).sup_norm(mask)
        report.first_order_residual = max(
            (estimate.symbol - quadratic_green_oracle((t,), grid, mass, base.start)).sup_norm(mask)
            for t, estimate in ((t1, first), (t2, second))
        )
    elif base.general is None:
        bare = PotentialSpec(base.start, base.end, source=base.source, confinement=base.confinement)
        reference = green_function(request((t1,), bare), max_workers, tolerances)
        shift = first.symbol - reference.symbol
        prediction = quartic_shift_prediction(base, t1, grid, mass)
        report.quartic_shift_error = _relative((shift - prediction).values, prediction.values, mask)
    logger.info(f"Moment check at {(t1, t2)}: {report.to_dict()}")
    return report

