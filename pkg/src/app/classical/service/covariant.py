"""
Covariant Hamiltonian formalism in 1+1 dimensions along a spacelike surface
x(s) = (x0(s), x1(s)).

With one parameter the Jacobians reduce to J_0 = dx1/ds (x0 omitted) and
J_1 = dx0/ds (x1 omitted). For the Lagrangian of ``LagrangianSpec``,
L_{phi_x0} = phi_x0 and L_{phi_x1} = -phi_x1.
"""
from typing import Mapping, Optional, Tuple

import numpy as np

from src.app.classical.domain.lattice import FieldData, LagrangianSpec, SurfaceParameterization
from src.app.config.core import resolve_tolerances
from src.app.utils.errors import InconsistentMomentumError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)


def _jacobians(surface: SurfaceParameterization) -> Tuple[np.ndarray, np.ndarray]:
    return surface.x1_s, surface.x0_s


def _gradient_derivatives(field: FieldData) -> Tuple[np.ndarray, np.ndarray]:
    return field.phi_x0, -field.phi_x1


def conjugate_momentum(surface: SurfaceParameterization, field: FieldData, spec: LagrangianSpec) -> np.ndarray:
    """pi(s) = sum_l (-1)^l L_{phi_x^l} J_l = phi_x0 dx1/ds + phi_x1 dx0/ds."""
    field.require_on(surface)
    j0, j1 = _jacobians(surface)
    l0, l1 = _gradient_derivatives(field)
    return l0 * j0 - l1 * j1


def covariant_hamiltonian_densities(
    surface: SurfaceParameterization,
    field: FieldData,
    momentum: np.ndarray,
    spec: LagrangianSpec,
    tolerances: Optional[Mapping[str, float]] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    H^j = sum_{l != j} (-1)^l L_{phi_x^l} phi_x^j J_l + (-1)^j (L_{phi_x^j} phi_x^j - L) J_j.

    On the flat surface x0 = const, x1 = s this is H0 = (pi^2 + phi_s^2 + m^2 phi^2) / 2
    (plus g phi^4 / 4!) and H1 = pi phi_s.

    Raises:
        InconsistentMomentumError: If ``momentum`` differs from the conjugate momentum of the field data.
    """
    tolerances = resolve_tolerances(tolerances)
    expected = conjugate_momentum(surface, field, spec)
    momentum = np.asarray(momentum, dtype=float)
    scale = max(float(np.max(np.abs(expected))), 1.0)
    residual = float(np.max(np.abs(momentum - expected))) / scale
    if residual > tolerances["momentum_consistency"]:
        logger.error(f"Supplied momentum is off by {residual:.3e} relative")
        raise InconsistentMomentumError(
            f"supplied pi differs from the conjugate momentum by {residual:.3e} "
            f"(tolerance {tolerances['momentum_consistency']})"
        )
    j0, j1 = _jacobians(surface)
    l0, l1 = _gradient_derivatives(field)
    lagrangian = spec.density(field.phi, field.phi_x0, field.phi_x1, surface.x0, surface.x1)
    h0 = -l1 * field.phi_x0 * j1 + (l0 * field.phi_x0 - lagrangian) * j0
    h1 = l0 * field.phi_x1 * j0 - (l1 * field.phi_x1 - lagrangian) * j1
    return h0, h1
