from .contraction_kernel import (
    ContractionKernel,
    KernelName,
    feynman_kernel,
    kernel_generator,
    pauli_jordan_kernel,
    pv_timeordered_kernel,
    symmetric_part_kernel,
)
from .functional_polynomial import FunctionalPolynomial, TermKey
from .time_grid import TimeGrid

__all__ = [
    "TimeGrid",
    "FunctionalPolynomial",
    "TermKey",
    "ContractionKernel",
    "KernelName",
    "kernel_generator",
    "pauli_jordan_kernel",
    "pv_timeordered_kernel",
    "feynman_kernel",
    "symmetric_part_kernel",
]
