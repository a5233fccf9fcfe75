"""
Suite registry and the scenario runner.
"""
from .runner import ScenarioRunner
from .suites import SUITES, Suite, SuiteContext

__all__ = ["SUITES", "Suite", "SuiteContext", "ScenarioRunner"]
