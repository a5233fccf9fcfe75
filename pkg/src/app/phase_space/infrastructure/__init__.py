from .binary_symbol_repository import BinarySymbolRepository
from .csv_symbol_repository import CsvSymbolRepository

__all__ = ["BinarySymbolRepository", "CsvSymbolRepository"]
