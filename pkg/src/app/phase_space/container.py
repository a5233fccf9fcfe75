# src/app/phase_space/container.py
from dependency_injector import containers, providers

from src.app.phase_space.infrastructure.binary_symbol_repository import BinarySymbolRepository
from src.app.phase_space.infrastructure.csv_symbol_repository import CsvSymbolRepository


class PhaseSpaceContainer(containers.DeclarativeContainer):
    """
    Container for symbol persistence.
    """
    config = providers.Configuration()

    binary_repository = providers.Singleton(BinarySymbolRepository)

    csv_repository = providers.Singleton(
        CsvSymbolRepository,
        max_points=config.csv_max_points.as_int(),
    )
