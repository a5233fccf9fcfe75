from dependency_injector import containers, providers

from src.app.classical.container import ClassicalContainer
from src.app.green.container import GreenContainer
from src.app.perturbation.container import PerturbationContainer
from src.app.phase_space.container import PhaseSpaceContainer
from src.app.scenarios.container import ScenariosContainer


class Container(containers.DeclarativeContainer):
    """Root container for the lab.
    Configuration is loaded and applied in src/__init__.py
    """

    config = providers.Configuration(
        # populated by from_dict() with the fully resolved configuration
        # (defaults, yaml, env vars)
    )

    phase_space = providers.Container(
        PhaseSpaceContainer,
        config=config.storage,
    )

    perturbation = providers.Container(
        PerturbationContainer,
        config=config.storage,
    )

    # Green and scenario services read several sections, so they get the whole config.
    green = providers.Container(
        GreenContainer,
        app_config=config,
    )

    classical = providers.Container(ClassicalContainer)

    scenarios = providers.Container(
        ScenariosContainer,
        app_config=config,
    )
