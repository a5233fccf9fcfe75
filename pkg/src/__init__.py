"""
Lab initialization: resolve the configuration and wire the root container.
"""
from pathlib import Path
from typing import Optional

from src.app.config.core import load_app_config
from src.app.container import Container
from src.app.utils.logger import get_logger

logger = get_logger(__name__)


def create_container(config_path: Optional[Path] = None) -> Container:
    """Root container with defaults, config.yml and environment overrides applied."""
    app_container = Container()
    resolved_config = load_app_config(config_path)
    app_container.config.from_dict(resolved_config)
    logger.info(
        f"{resolved_config['app']['name']} {resolved_config['app']['version']} configured "
        f"with {resolved_config['runtime']['max_workers']} worker(s)"
    )
    return app_container
