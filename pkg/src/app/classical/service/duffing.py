"""
Driven anharmonic oscillator: RK4 trajectories, the interaction-picture
scattering map and its Jacobian.
"""
from typing import Mapping, Optional, Tuple

import numpy as np
from scipy.integrate import quad, simpson

from src.app.classical.domain.duffing import DuffingParams, Trajectory
from src.app.config.core import resolve_tolerances
from src.app.dynamics.domain.hamiltonian import QuadraticHamiltonian
from src.app.dynamics.service.flow import free_flow
from src.app.green.service.extrapolation import extrapolate
from src.app.utils.errors import StepResolutionError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)

PhasePoint = Tuple[np.ndarray, np.ndarray]


def _check_step(params: DuffingParams, dt: float, tolerance: float) -> None:
    if dt * params.mass >= tolerance:
        raise StepResolutionError(
            f"time step {dt:.3e} does not resolve the frequency m={params.mass}: dt m = {dt * params.mass:.3f} "
            f">= {tolerance}"
        )


def solve_duffing(
    params: DuffingParams,
    initial: PhasePoint,
    steps: int,
    tolerances: Optional[Mapping[str, float]] = None,
) -> Trajectory:
    """
    Classical RK4 integration of q' = p, p' = -m^2 q - g q^3 / 6 - j over [T1, T2].

    Args:
        params (DuffingParams): frequency, envelopes and window
        initial (PhasePoint): (q0, p0) at T1, scalars or equal-shape arrays
        steps (int): uniform steps
        tolerances (Optional[Mapping[str, float]]): overrides of the default table

    Returns:
        Trajectory: steps + 1 samples including both window ends

    Raises:
        StepResolutionError: If dt m reaches the configured bound.
    """
    tolerances = resolve_tolerances(tolerances)
    dt = params.duration / steps
    _check_step(params, dt, tolerances["duffing_step"])
    times = params.start + dt * np.arange(steps + 1)
    q, p = np.broadcast_arrays(np.asarray(initial[0], dtype=float), np.asarray(initial[1], dtype=float))
    qs = np.empty((steps + 1,) + q.shape)
    ps = np.empty((steps + 1,) + q.shape)
    qs[0], ps[0] = q, p
    force = params.force
    for n in range(steps):
        t = times[n]
        k1q, k1p = p, force(t, q)
        k2q, k2p = p + 0.5 * dt * k1p, force(t + 0.5 * dt, q + 0.5 * dt * k1q)
        k3q, k3p = p + 0.5 * dt * k2p, force(t + 0.5 * dt, q + 0.5 * dt * k2q)
        k4q, k4p = p + dt * k3p, force(t + dt, q + dt * k3q)
        q = q + dt / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q)
        p = p + dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        qs[n + 1], ps[n + 1] = q, p
    logger.debug(f"Duffing run over [{params.start}, {params.end}] with {steps} steps, batch shape {q.shape}")
    return Trajectory(times, qs, ps)


def classical_scattering_map(
    params: DuffingParams,
    initial: PhasePoint,
    steps: int,
    tolerances: Optional[Mapping[str, float]] = None,
) -> PhasePoint:
    """
    Interaction-picture map referenced to T1: evolve (q0, p0) through the
    window with the full dynamics, then undo the free rotation over T2 - T1.
    """
    trajectory = solve_duffing(params, initial, steps, tolerances)
    q, p = trajectory.final
    back = free_flow(QuadraticHamiltonian.oscillator(params.mass), -params.duration)
    return back(q, p)


def scattering_map_jacobian(
    params: DuffingParams,
    initial: Tuple[float, float],
    steps: int,
    step: float = 1e-3,
    tolerances: Optional[Mapping[str, float]] = None,
) -> np.ndarray:
    """
    2x2 Jacobian of the scattering map by central differences at h and h/2
    with one Richardson elimination.
    """
    q0, p0 = float(initial[0]), float(initial[1])

    def central(h: float) -> np.ndarray:
        q = q0 + np.array([h, -h, 0.0, 0.0])
        p = p0 + np.array([0.0, 0.0, h, -h])
        mq, mp = classical_scattering_map(params, (q, p), steps, tolerances)
        return np.array([
            [(mq[0] - mq[1]) / (2 * h), (mq[2] - mq[3]) / (2 * h)],
            [(mp[0] - mp[1]) / (2 * h), (mp[2] - mp[3]) / (2 * h)],
        ])

    jacobian, _ = extrapolate([step, 0.5 * step], [central(step), central(0.5 * step)])
    return jacobian


def symplectic_defect(jacobian: np.ndarray) -> float:
    """|det J - 1| for a 2x2 phase-space Jacobian."""
    return float(abs(np.linalg.det(jacobian) - 1.0))


def work_energy_residual(trajectory: Trajectory, params: DuffingParams) -> float:
    """
    |E(T2) - E(T1) - int p' of the non-harmonic force|, E = (p^2 + m^2 q^2) / 2,
    the power -p (g q^3 / 6 + j) integrated along the samples.
    """
    g = params.quartic(trajectory.times)
    j = params.source(trajectory.times)
    shape = (-1,) + (1,) * (trajectory.q.ndim - 1)
    power = -trajectory.p * (g.reshape(shape) * trajectory.q ** 3 / 6.0 + j.reshape(shape))
    work = simpson(power, x=trajectory.times, axis=0)
    energy = trajectory.energy(params.mass)
    return float(np.max(np.abs(energy[-1] - energy[0] - work)))


def duhamel_response(params: DuffingParams, initial: Tuple[float, float], times: np.ndarray) -> PhasePoint:
    """
    Exact linear response for g = 0:
    q(t) = q0 cos(m tau) + p0 sin(m tau) / m - int j(t') sin(m (t - t')) / m dt'.
    """
    m, start = params.mass, params.start
    q0, p0 = initial
    times = np.asarray(times, dtype=float)
    q = np.empty(times.shape)
    p = np.empty(times.shape)
    for index, t in enumerate(times):
        tau = t - start
        drive_q = quad(lambda s: params.source(s) * np.sin(m * (t - s)) / m, start, t, limit=200, epsabs=1e-13)[0]
        drive_p = quad(lambda s: params.source(s) * np.cos(m * (t - s)), start, t, limit=200, epsabs=1e-13)[0]
        q[index] = q0 * np.cos(m * tau) + p0 * np.sin(m * tau) / m - drive_q
        p[index] = -q0 * m * np.sin(m * tau) + p0 * np.cos(m * tau) - drive_p
    return q, p
