# src/app/classical/container.py
from dependency_injector import containers, providers

from src.app.classical.infrastructure.csv_classical_repository import CsvClassicalRepository


class ClassicalContainer(containers.DeclarativeContainer):
    """
    Container for classical run persistence.
    """
    csv_repository = providers.Singleton(CsvClassicalRepository)
