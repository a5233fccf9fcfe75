"""
Weyl-Moyal algebra of polynomial functionals of the free oscillator solution,
the time-ordered star exponential of the interaction and its Wick expansion.
"""
import itertools
from collections import Counter
from math import comb, factorial, prod
from typing import Callable, Dict, Mapping, Sequence, Tuple, Union

import numpy as np

from src.app.perturbation.domain.contraction_kernel import ContractionKernel, pauli_jordan_kernel
from src.app.perturbation.domain.functional_polynomial import FunctionalPolynomial
from src.app.perturbation.domain.time_grid import TimeGrid
from src.app.utils.errors import DegreeOverflowError, OrderBoundError, ShapeMismatchError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)

MAX_QUARTIC_ORDER = 2
MAX_SOURCE_ORDER = 4

Envelope = Union[Callable[[np.ndarray], np.ndarray], Sequence[float], np.ndarray]
Order = Tuple[int, int]
GradedPolynomial = Dict[Order, FunctionalPolynomial]


def _bracket_derivation(
    polynomial: FunctionalPolynomial,
    node: int,
    kernel: np.ndarray,
) -> FunctionalPolynomial:
    """(i hbar / 2) sum_a K(t_a, t_node) d/dq(t_a) applied to a polynomial."""
    result = FunctionalPolynomial(polynomial.max_degree)
    for (power, insertions), coefficient in polynomial.terms.items():
        for a, multiplicity in Counter(insertions).items():
            weight = kernel[a, node]
            if weight == 0:
                continue
            remaining = list(insertions)
            remaining.remove(a)
            result.add_term(power + 1, remaining, coefficient * multiplicity * 0.5j * weight)
    return result


def star_functionals(
    left: FunctionalPolynomial,
    right: FunctionalPolynomial,
    kernel: ContractionKernel,
) -> FunctionalPolynomial:
    """
    Moyal product exp((i hbar / 2) sum_ab K(t_a, t_b) d_a (x) d_b) on functionals.

    For a right monomial prod_b q_b^r_b the exponential factorizes per node:
    sum over k_b <= r_b of C(r_b, k_b) D_b^k_b(left) q_b^(r_b - k_b).

    Raises:
        DegreeOverflowError: If deg(left) + deg(right) exceeds the degree bound.
    """
    bound = max(left.max_degree, right.max_degree)
    if left.degree + right.degree > bound:
        raise DegreeOverflowError(f"star product of degrees {left.degree} and {right.degree} exceeds D={bound}")
    values = kernel.values
    derived: Dict[Tuple[int, ...], FunctionalPolynomial] = {(): left}

    def derive(chain: Tuple[int, ...]) -> FunctionalPolynomial:
        if chain not in derived:
            derived[chain] = _bracket_derivation(derive(chain[:-1]), chain[-1], values)
        return derived[chain]

    result = FunctionalPolynomial(bound)
    for (power, insertions), coefficient in right.terms.items():
        multiplicity = Counter(insertions)
        nodes = sorted(multiplicity)
        for counts in itertools.product(*(range(multiplicity[b] + 1) for b in nodes)):
            chain = tuple(b for b, k in zip(nodes, counts) for _ in range(k))
            term = derive(chain)
            if not term.terms:
                continue
            weight = coefficient * prod(comb(multiplicity[b], k) for b, k in zip(nodes, counts))
            remaining = tuple(b for b, k in zip(nodes, counts) for _ in range(multiplicity[b] - k))
            for (left_power, left_insertions), left_coefficient in term.terms.items():
                result.add_term(left_power + power, left_insertions + remaining, left_coefficient * weight)
    return result


def _check_orders(orders: Order, max_degree: int) -> Order:
    n_g, n_j = (int(o) for o in orders)
    if n_g < 0 or n_j < 0 or n_g > MAX_QUARTIC_ORDER or n_j > MAX_SOURCE_ORDER:
        raise OrderBoundError(
            f"orders {(n_g, n_j)} outside 0 <= n_g <= {MAX_QUARTIC_ORDER}, 0 <= n_j <= {MAX_SOURCE_ORDER}"
        )
    if max_degree < 4 * n_g + n_j:
        raise DegreeOverflowError(f"degree bound D={max_degree} below 4 n_g + n_j = {4 * n_g + n_j}")
    return n_g, n_j


def _sample(envelope: Envelope, time_grid: TimeGrid) -> np.ndarray:
    if callable(envelope):
        return time_grid.sample(envelope)
    values = np.asarray(envelope, dtype=float)
    if values.shape != (time_grid.nodes,):
        raise ShapeMismatchError(f"envelope has {values.shape} samples for {time_grid.nodes} nodes")
    return values


def _node_factor(
    node: int,
    quartic: float,
    source: float,
    weight: float,
    orders: Order,
    max_degree: int,
) -> GradedPolynomial:
    """
    Truncated exp((w / i hbar)(g q^4 / 4! + j q)) at one node, graded by (g-order, j-order).

    Field factors at one time commute under the star product, so the local
    exponential is the ordinary one.
    """
    n_g, n_j = orders
    factor: GradedPolynomial = {}
    for a in range(n_g + 1):
        for b in range(n_j + 1):
            coefficient = (
                (weight * quartic / 24.0) ** a / factorial(a)
                * (weight * source) ** b / factorial(b)
                * (-1j) ** (a + b)
            )
            if coefficient == 0:
                continue
            factor[(a, b)] = FunctionalPolynomial(max_degree, {(-(a + b), (node,) * (4 * a + b)): coefficient})
    return factor


def _graded_combine(
    left: GradedPolynomial,
    right: GradedPolynomial,
    orders: Order,
    multiply: Callable[[FunctionalPolynomial, FunctionalPolynomial], FunctionalPolynomial],
) -> GradedPolynomial:
    result: GradedPolynomial = {}
    for (a1, b1), p1 in left.items():
        for (a2, b2), p2 in right.items():
            order = (a1 + a2, b1 + b2)
            if order[0] > orders[0] or order[1] > orders[1]:
                continue
            term = multiply(p1, p2)
            result[order] = result[order] + term if order in result else term
    return result


def star_dyson_orders(
    quartic: Envelope,
    source: Envelope,
    time_grid: TimeGrid,
    mass: float,
    orders: Order,
    max_degree: int,
) -> GradedPolynomial:
    """
    Components (n_g, n_j) of T exp_*((1 / i hbar) int (g q^4 / 4! + j q) dt).

    The quadrature turns the time-ordered exponential into E_M * ... * E_1,
    one local factor per node with later times on the left.

    Args:
        quartic (Envelope): g(t), callable or node samples
        source (Envelope): j(t), callable or node samples
        time_grid (TimeGrid): insertion nodes and weights
        mass (float): oscillator frequency m
        orders (Order): highest (n_g, n_j) kept
        max_degree (int): D >= 4 n_g + n_j

    Returns:
        GradedPolynomial: polynomial per order (a, b) with a <= n_g, b <= n_j

    Raises:
        OrderBoundError: If n_g > 2 or n_j > 4.
        DegreeOverflowError: If D < 4 n_g + n_j.
    """
    orders = _check_orders(orders, max_degree)
    g = _sample(quartic, time_grid)
    j = _sample(source, time_grid)
    kernel = pauli_jordan_kernel(mass, time_grid)
    multiply = lambda p1, p2: star_functionals(p1, p2, kernel)  # noqa: E731

    result: GradedPolynomial = {(0, 0): FunctionalPolynomial.constant(1.0, max_degree)}
    for node in reversed(range(time_grid.nodes)):
        factor = _node_factor(node, g[node], j[node], time_grid.weights[node], orders, max_degree)
        result = _graded_combine(result, factor, orders, multiply)
    logger.debug(f"Star-Dyson expansion to orders {orders}: {sum(len(p) for p in result.values())} terms")
    return result


def star_dyson(
    quartic: Envelope,
    source: Envelope,
    time_grid: TimeGrid,
    mass: float,
    orders: Order,
    max_degree: int,
) -> FunctionalPolynomial:
    """Sum of all star-Dyson components up to the given orders."""
    components = star_dyson_orders(quartic, source, time_grid, mass, orders, max_degree)
    return _total(components, max_degree)


def _total(components: Mapping[Order, FunctionalPolynomial], max_degree: int) -> FunctionalPolynomial:
    total = FunctionalPolynomial.zero(max_degree)
    for order in sorted(components):
        total = total + components[order]
    return total


def _contract_once(polynomial: FunctionalPolynomial, kernel: np.ndarray) -> FunctionalPolynomial:
    """hbar sum_{a < b} C(t_a, t_b) d_a d_b; equal-time pairs are not contracted."""
    result = FunctionalPolynomial(polynomial.max_degree)
    for (power, insertions), coefficient in polynomial.terms.items():
        multiplicity = Counter(insertions)
        nodes = sorted(multiplicity)
        for i, a in enumerate(nodes):
            for b in nodes[i + 1:]:
                weight = kernel[a, b]
                if weight == 0:
                    continue
                remaining = list(insertions)
                remaining.remove(a)
                remaining.remove(b)
                result.add_term(power + 1, remaining, coefficient * multiplicity[a] * multiplicity[b] * weight)
    return result


def wick_contract(polynomial: FunctionalPolynomial, kernel: ContractionKernel) -> FunctionalPolynomial:
    """exp(hbar sum_{a < b} C_ab d_a d_b) applied to an ordinary-product polynomial."""
    symmetric = 0.5 * (kernel.values + kernel.values.T)
    total = polynomial.copy()
    current = polynomial
    k = 1
    while current.terms:
        current = _contract_once(current, symmetric).scale(1.0 / k)
        total = total + current
        k += 1
    return total


def ordinary_product_orders(
    quartic: Envelope,
    source: Envelope,
    time_grid: TimeGrid,
    orders: Order,
    max_degree: int,
) -> GradedPolynomial:
    """Ordinary (commutative) product of the local exponentials, graded by order."""
    orders = _check_orders(orders, max_degree)
    g = _sample(quartic, time_grid)
    j = _sample(source, time_grid)
    product: GradedPolynomial = {(0, 0): FunctionalPolynomial.constant(1.0, max_degree)}
    for node in range(time_grid.nodes):
        factor = _node_factor(node, g[node], j[node], time_grid.weights[node], orders, max_degree)
        product = _graded_combine(product, factor, orders, FunctionalPolynomial.product)
    return product


def wick_expand_orders(
    quartic: Envelope,
    source: Envelope,
    kernel: ContractionKernel,
    orders: Order,
    max_degree: int,
) -> GradedPolynomial:
    """
    Ordinary product of the local exponentials followed by all contraction
    patterns with the given time-ordered kernel.
    """
    product = ordinary_product_orders(quartic, source, kernel.time_grid, orders, max_degree)
    return {order: wick_contract(polynomial, kernel) for order, polynomial in product.items()}


def wick_expand(
    quartic: Envelope,
    source: Envelope,
    kernel: ContractionKernel,
    orders: Order,
    max_degree: int,
) -> FunctionalPolynomial:
    """Sum of the Wick components up to the given orders."""
    return _total(wick_expand_orders(quartic, source, kernel, orders, max_degree), max_degree)
