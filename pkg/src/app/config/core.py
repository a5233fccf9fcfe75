# src/app/config/core.py
import copy
import logging
import os
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv

from .default_settings import DEFAULT_CONFIG, DEFAULT_TOLERANCES, PROJECT_ROOT

config_logger = logging.getLogger(__name__ + ".app_config_loader")

CONFIG_FILE_PATH = PROJECT_ROOT / "config.yml"


def deep_update(source: dict, overrides: dict) -> dict:
    """Recursively merge ``overrides`` into ``source`` (in place)."""
    for key, value in overrides.items():
        if isinstance(value, dict) and key in source and isinstance(source[key], dict):
            deep_update(source[key], value)
        else:
            source[key] = value
    return source


def resolve_tolerances(overrides: Optional[dict] = None) -> dict:
    """Default tolerance table with per-call overrides applied."""
    tolerances = dict(DEFAULT_TOLERANCES)
    if overrides:
        tolerances.update(overrides)
    return tolerances


def load_app_config(config_path: Optional[Path] = None) -> dict:
    """
    Loads lab configuration from defaults, YAML file, and environment variables.
    """
    load_dotenv()
    config = copy.deepcopy(DEFAULT_CONFIG)
    path = Path(config_path) if config_path else CONFIG_FILE_PATH

    try:
        with open(path, "r") as f:
            yaml_config = yaml.safe_load(f)
            if yaml_config:
                config = deep_update(config, yaml_config)
                config_logger.info(f"Successfully loaded and merged configuration from '{path}'.")
    except FileNotFoundError:
        config_logger.info(f"Configuration file '{path}' not found. Using defaults and environment variables.")
    except yaml.YAMLError as e:
        config_logger.error(f"Error parsing configuration file '{path}': {e}. Using defaults and environment variables.")

    runtime_cfg = config.setdefault("runtime", {})
    runtime_cfg["max_workers"] = int(os.environ.get("WEYL_LAB_MAX_WORKERS", runtime_cfg.get("max_workers", 1)))
    if runtime_cfg["max_workers"] < 1:
        config_logger.warning("WEYL_LAB_MAX_WORKERS below 1; using a single worker.")
        runtime_cfg["max_workers"] = 1
    runtime_cfg["output_dir"] = os.environ.get("WEYL_LAB_OUTPUT_DIR", runtime_cfg.get("output_dir"))

    band_cfg = config.setdefault("band_limit", {})
    band_cfg["strict"] = os.environ.get(
        "WEYL_LAB_STRICT_BAND_LIMIT", str(band_cfg.get("strict", False))
    ).lower() == "true"

    config_logger.info("Lab configuration loaded successfully.")
    return config
