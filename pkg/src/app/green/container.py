# src/app/green/container.py
from dependency_injector import containers, providers

from src.app.green.infrastructure.csv_convergence_repository import CsvConvergenceRepository
from src.app.green.service.green_service import GreenService


class GreenContainer(containers.DeclarativeContainer):
    """
    Container for Green-function estimation.
    """
    app_config = providers.Configuration(name="app_config")

    convergence_repository = providers.Singleton(CsvConvergenceRepository)

    green_service = providers.Factory(
        GreenService,
        convergence_repository=convergence_repository,
        config=app_config,
    )
