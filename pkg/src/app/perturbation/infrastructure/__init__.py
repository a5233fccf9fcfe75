from .json_polynomial_repository import JsonPolynomialRepository

__all__ = ["JsonPolynomialRepository"]
