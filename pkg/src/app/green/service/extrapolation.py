"""
Richardson extrapolation to zero step in Neville form.
"""
from typing import List, Sequence, Tuple

import numpy as np

from src.app.utils.errors import ConvergenceError


def neville_tableau(steps: Sequence[float], estimates: Sequence[np.ndarray], power: int = 2) -> List[List[np.ndarray]]:
    """
    Tableau T[i][k] of polynomial extrapolation in x = h^power to x = 0.

    T[i][0] is the raw estimate at steps[i]; T[i][k] eliminates the k leading
    error terms using steps[i - k..i].
    """
    if len(steps) != len(estimates) or not steps:
        raise ConvergenceError(f"need matching non-empty ladders, got {len(steps)} steps and {len(estimates)} estimates")
    xs = [float(h) ** power for h in steps]
    if len(set(xs)) != len(xs):
        raise ConvergenceError(f"extrapolation steps must be distinct, got {list(steps)}")
    tableau: List[List[np.ndarray]] = []
    for i, estimate in enumerate(estimates):
        row = [np.asarray(estimate)]
        for k in range(1, i + 1):
            row.append((xs[i - k] * row[k - 1] - xs[i] * tableau[i - 1][k - 1]) / (xs[i - k] - xs[i]))
        tableau.append(row)
    return tableau


def extrapolate(
    steps: Sequence[float],
    estimates: Sequence[np.ndarray],
    power: int = 2,
    mask: np.ndarray = None,
) -> Tuple[np.ndarray, float]:
    """
    Highest-order extrapolated value and its error estimate, the sup distance
    to the next-lower order at the finest step.
    """
    tableau = neville_tableau(steps, estimates, power)
    last = tableau[-1]
    value = last[-1]
    if len(last) < 2:
        return value, float("inf")
    difference = np.abs(last[-1] - last[-2])
    if mask is not None:
        difference = difference[mask]
    return value, float(np.max(difference)) if difference.size else 0.0
