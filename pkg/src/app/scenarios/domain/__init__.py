"""
Scenario configuration and report records.
"""
from .check_result import CheckResult, SuiteReport
from .repositories import ReportRepository
from .scenario_config import ScenarioConfig, SuiteName

__all__ = ["ScenarioConfig", "SuiteName", "CheckResult", "SuiteReport", "ReportRepository"]
