# src/app/perturbation/container.py
from dependency_injector import containers, providers

from src.app.perturbation.infrastructure.json_polynomial_repository import JsonPolynomialRepository


class PerturbationContainer(containers.DeclarativeContainer):
    """
    Container for functional-polynomial persistence.
    """
    config = providers.Configuration()

    polynomial_repository = providers.Singleton(
        JsonPolynomialRepository,
        indent=config.json_indent.as_int(),
    )
