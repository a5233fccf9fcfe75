import time
from datetime import datetime, timezone
from importlib import metadata as importlib_metadata
from pathlib import Path
from typing import Optional, Union

import yaml
from pydantic import ValidationError

from src.app.config.core import resolve_tolerances
from src.app.dynamics.domain.hamiltonian import ConfinementWindow
from src.app.moyal.domain.star_method import BandLimitPolicy
from src.app.scenarios.domain.check_result import SuiteReport
from src.app.scenarios.domain.repositories import ReportRepository
from src.app.scenarios.domain.scenario_config import ScenarioConfig
from src.app.scenarios.service.suites import SUITES, SuiteContext
from src.app.utils.errors import ConfigError, WeylLabError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)

VERSIONED_PACKAGES = ("numpy", "scipy", "sympy", "pydantic", "pyyaml", "click")


def _library_versions() -> dict:
    versions = {}
    for package in VERSIONED_PACKAGES:
        try:
            versions[package] = importlib_metadata.version(package)
        except importlib_metadata.PackageNotFoundError:
            versions[package] = None
    return versions


def _describe(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"]) or "<root>"
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)


class ScenarioRunner:
    """
    Loads scenario files, runs the selected suite and stores its report.
    """

    def __init__(self, report_repository: ReportRepository, config: Optional[dict] = None):
        self.report_repository = report_repository
        self.config = config if config else {}
        runtime_cfg = self.config.get("runtime", {})
        self.max_workers = int(runtime_cfg.get("max_workers", 1))
        self.output_dir = runtime_cfg.get("output_dir") or "reports"
        self.base_tolerances = resolve_tolerances(self.config.get("tolerances"))
        self.confinement = ConfinementWindow(**self.config.get("confinement", {}))
        self.limit_half_extent = float(self.config.get("classical", {}).get("limit_half_extent", 4.0))
        strict = bool(self.config.get("band_limit", {}).get("strict", False))
        self.band_limit = BandLimitPolicy.STRICT if strict else BandLimitPolicy.WARN

    def load_scenario(self, path: Union[str, Path]) -> ScenarioConfig:
        """
        Raises:
            ConfigError: If the file is missing, is not valid YAML, or fails validation.
        """
        path = Path(path)
        try:
            with open(path, "r") as f:
                raw = yaml.safe_load(f)
        except OSError as e:
            raise ConfigError(f"cannot read scenario file '{path}': {e}") from e
        except yaml.YAMLError as e:
            raise ConfigError(f"scenario file '{path}' is not valid YAML: {e}") from e
        if not isinstance(raw, dict):
            raise ConfigError(f"scenario file '{path}' must hold a mapping at the top level")
        try:
            return ScenarioConfig.model_validate(raw)
        except ValidationError as e:
            logger.error(f"Scenario '{path}' rejected: {_describe(e)}")
            raise ConfigError(f"invalid scenario '{path}': {_describe(e)}") from e

    def context(self, scenario: ScenarioConfig) -> SuiteContext:
        tolerances = dict(self.base_tolerances)
        tolerances.update(scenario.tolerances)
        return SuiteContext(
            tolerances=tolerances,
            confinement=self.confinement,
            max_workers=self.max_workers,
            limit_half_extent=self.limit_half_extent,
            band_limit=self.band_limit,
        )

    def run(self, scenario: ScenarioConfig, output_dir: Optional[Union[str, Path]] = None) -> SuiteReport:
        """
        Run one suite and write summary.json, per-check CSV series and
        metadata.json to ``output_dir`` (scenario value, then the lab default).

        Raises:
            WeylLabError: Numerical or I/O failures from the suite, passed through.
        """
        suite = SUITES[scenario.suite]
        target = Path(output_dir or scenario.output_dir or Path(self.output_dir) / suite.name.value)
        started_at = datetime.now(timezone.utc)
        started = time.perf_counter()
        logger.info(f"Running suite '{suite.name.value}' with {self.max_workers} worker(s)")
        try:
            checks = suite.run(scenario, self.context(scenario))
        except WeylLabError:
            logger.error(f"Suite '{suite.name.value}' aborted")
            raise
        wall_time = time.perf_counter() - started

        report = SuiteReport(suite.name.value, checks, scenario.model_dump(mode="json", exclude={"output_dir"}))
        run_metadata = {
            "suite": suite.name.value,
            "started_at": started_at.isoformat(),
            "wall_time_seconds": wall_time,
            "max_workers": self.max_workers,
            "versions": _library_versions(),
        }
        self.report_repository.save(report, target, run_metadata)
        if report.passed:
            logger.info(f"Suite '{suite.name.value}' passed {len(checks)} checks in {wall_time:.1f} s")
        else:
            logger.warning(f"Suite '{suite.name.value}' failed: {', '.join(report.failures)}")
        return report
