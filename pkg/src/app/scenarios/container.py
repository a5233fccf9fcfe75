# src/app/scenarios/container.py
from dependency_injector import containers, providers

from src.app.scenarios.infrastructure.json_report_repository import JsonReportRepository
from src.app.scenarios.service.runner import ScenarioRunner


class ScenariosContainer(containers.DeclarativeContainer):
    """
    Container for the suite runner and its report storage.
    """
    app_config = providers.Configuration(name="app_config")

    report_repository = providers.Singleton(JsonReportRepository)

    scenario_runner = providers.Factory(
        ScenarioRunner,
        report_repository=report_repository,
        config=app_config,
    )
