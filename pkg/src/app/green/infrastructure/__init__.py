from .csv_convergence_repository import CsvConvergenceRepository

__all__ = ["CsvConvergenceRepository"]
