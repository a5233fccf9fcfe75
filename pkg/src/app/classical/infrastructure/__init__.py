from .csv_classical_repository import CsvClassicalRepository

__all__ = ["CsvClassicalRepository"]
