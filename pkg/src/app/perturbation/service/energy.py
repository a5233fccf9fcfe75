"""
Energy-domain view of the contraction kernels.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
from scipy.integrate import simpson

from src.app.perturbation.domain.contraction_kernel import ContractionKernel
from src.app.utils.errors import SingularEnergyError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)

ACCEPTANCE_GAP = 0.5


@dataclass
class EnergyTransformReport:
    """
    Windowed transform F(E) = int K(tau) exp(i E tau) w(tau) dtau over |tau| <= T_w with the
    Gaussian taper w = exp(-tau^2 / 2 s^2), s = T_w / 6.

    Attributes:
        constant (complex): c of the least-squares fit F ~ c PV 1 / (E^2 - m^2) away from E = +-m
        pv_relative_error (float): max |F - c / (E^2 - m^2)| / |c / (E^2 - m^2)| where ||E| - m| > 0.5
        zero_energy_error (Optional[float]): |F(0) + c / m^2| / |c / m^2| when E = 0 is sampled
    """
    kernel: str
    mass: float
    energies: np.ndarray
    values: np.ndarray
    window_length: float
    taper_width: float
    constant: complex
    pv_relative_error: float
    zero_energy_error: Optional[float]

    def rows(self) -> List[dict]:
        """Columns E, re_transform, im_transform, pv_reference = 1 / (E^2 - m^2)."""
        rows = []
        for e, v in zip(self.energies, self.values):
            gap = float(e) ** 2 - self.mass ** 2
            reference = 1.0 / gap if gap != 0.0 else float("nan")
            rows.append(
                {"E": float(e), "re_transform": float(v.real), "im_transform": float(v.imag), "pv_reference": reference}
            )
        return rows


def kernel_energy_transform(
    kernel: ContractionKernel,
    energies: Sequence[float],
    window_length: Optional[float] = None,
    taper_width: Optional[float] = None,
    exclude_singular: bool = False,
    samples: int = 2 ** 16 + 1,
) -> EnergyTransformReport:
    """
    Fourier transform in the lag tau = t1 - t2 of a stationary kernel.

    Args:
        kernel (ContractionKernel): kernel with its closed-form generator
        energies (Sequence[float]): E grid
        window_length (Optional[float]): T_w, defaults to 200 / m
        taper_width (Optional[float]): s, defaults to T_w / 6
        exclude_singular (bool): drop E = +-m instead of raising
        samples (int): odd number of lag samples for Simpson's rule

    Raises:
        SingularEnergyError: If the E grid hits +-m and exclusion is off.
    """
    m = kernel.mass
    energies = np.asarray(energies, dtype=float)
    singular = np.isclose(np.abs(energies), m, rtol=0.0, atol=1e-9 * max(m, 1.0))
    if np.any(singular):
        if not exclude_singular:
            raise SingularEnergyError(f"energy grid contains the singular points +-{m}")
        energies = energies[~singular]
    window = 200.0 / m if window_length is None else float(window_length)
    width = window / 6.0 if taper_width is None else float(taper_width)
    if samples % 2 == 0:
        samples += 1

    tau = np.linspace(-window, window, samples)
    weighted = kernel.of_lag(tau) * np.exp(-0.5 * (tau / width) ** 2)
    values = np.array([simpson(weighted * np.exp(1j * e * tau), x=tau) for e in energies])

    reference = 1.0 / (energies ** 2 - m ** 2)
    region = np.abs(np.abs(energies) - m) > ACCEPTANCE_GAP
    if np.any(region):
        r = reference[region]
        constant = complex(np.sum(values[region] * r) / np.sum(r * r))
        fitted = constant * r
        pv_error = float(np.max(np.abs(values[region] - fitted) / np.abs(fitted)))
    else:
        constant, pv_error = 0j, float("nan")
    zero = np.isclose(energies, 0.0, rtol=0.0, atol=1e-12)
    zero_error = None
    if np.any(zero) and constant != 0:
        expected = -constant / m ** 2
        zero_error = float(abs(values[zero][0] - expected) / abs(expected))
    logger.info(f"{kernel.name.value} transform: c = {constant:.6g}, PV relative error {pv_error:.3e}")
    return EnergyTransformReport(
        kernel=kernel.name.value,
        mass=m,
        energies=energies,
        values=values,
        window_length=window,
        taper_width=width,
        constant=constant,
        pv_relative_error=pv_error,
        zero_energy_error=zero_error,
    )
