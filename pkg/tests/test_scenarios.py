import json

import pytest
import yaml
from click.testing import CliRunner

from src import create_container
from src.app.scenarios.domain.check_result import CheckResult, SuiteReport
from src.app.scenarios.domain.scenario_config import ScenarioConfig, SuiteName
from src.app.scenarios.infrastructure.json_report_repository import JsonReportRepository
from src.app.scenarios.service.runner import ScenarioRunner
from src.app.utils.errors import ConfigError
from src.cli.main import cli


@pytest.fixture
def runner():
    return ScenarioRunner(JsonReportRepository())


def write_scenario(path, payload):
    path.write_text(yaml.safe_dump(payload))
    return path


def test_list_suites_names_every_suite():
    result = CliRunner().invoke(cli, ["list-suites"])
    assert result.exit_code == 0
    for name in SuiteName:
        assert name.value in result.output


def test_print_schema_is_json():
    result = CliRunner().invoke(cli, ["print-schema"])
    assert result.exit_code == 0
    schema = json.loads(result.output)
    assert "suite" in schema["properties"]


def test_print_schema_for_a_suite_is_a_loadable_scenario():
    result = CliRunner().invoke(cli, ["print-schema", "--suite", "algebra"])
    assert result.exit_code == 0
    assert result.output.startswith("#")
    scenario = ScenarioConfig.model_validate(yaml.safe_load(result.output))
    assert scenario.suite == SuiteName.ALGEBRA


def test_unknown_keys_exit_with_config_error(tmp_path):
    path = write_scenario(tmp_path / "bad.yml", {"suite": "algebra", "grid": {"points": 16, "spacing": 0.1}})
    result = CliRunner().invoke(cli, ["run", str(path), "-o", str(tmp_path / "out")])
    assert result.exit_code == 2
    assert "spacing" in result.output


def test_missing_scenario_file_exits_with_config_error(tmp_path):
    result = CliRunner().invoke(cli, ["run", str(tmp_path / "absent.yml")])
    assert result.exit_code == 2


def test_small_algebra_run_passes_and_writes_the_report(tmp_path):
    path = write_scenario(tmp_path / "algebra.yml", {"suite": "algebra", "grid": {"points": 64, "hbars": [0.2, 0.1]}})
    out = tmp_path / "out"
    result = CliRunner().invoke(cli, ["run", str(path), "-o", str(out)])
    assert result.exit_code == 0, result.output
    summary = json.loads((out / "summary.json").read_text())
    assert summary["suite"] == "algebra"
    assert summary["passed"] is True
    assert {check["name"] for check in summary["checks"]} >= {"round_trip", "correspondence", "star_slope"}
    metadata = json.loads((out / "metadata.json").read_text())
    assert "wall_time_seconds" in metadata
    assert (out / "star_slope.csv").exists()


def test_reports_are_byte_identical_across_runs(tmp_path):
    path = write_scenario(tmp_path / "algebra.yml", {"suite": "algebra", "grid": {"points": 32, "hbars": [0.2, 0.1]}})
    outputs = [tmp_path / "first", tmp_path / "second"]
    for out in outputs:
        CliRunner().invoke(cli, ["run", str(path), "-o", str(out)])
    for name in ("summary.json", "star_slope.csv", "bracket_slope.csv"):
        assert (outputs[0] / name).read_bytes() == (outputs[1] / name).read_bytes()
    assert (outputs[0] / "metadata.json").exists()


@pytest.mark.parametrize(
    "content",
    ["suite: [algebra\n", "- suite\n- algebra\n", "suite: entanglement\n", "suite: algebra\ngrid:\n  points: 15\n"],
)
def test_load_scenario_rejects_bad_files(tmp_path, runner, content):
    path = tmp_path / "scenario.yml"
    path.write_text(content)
    with pytest.raises(ConfigError):
        runner.load_scenario(path)


def test_load_scenario_rejects_unknown_tolerances(tmp_path, runner):
    path = write_scenario(tmp_path / "scenario.yml", {"suite": "green", "tolerances": {"speed": 1.0}})
    with pytest.raises(ConfigError) as excinfo:
        runner.load_scenario(path)
    assert "speed" in str(excinfo.value)


def test_scenario_overrides_apply_to_the_context(tmp_path, runner):
    path = write_scenario(tmp_path / "scenario.yml", {"suite": "algebra", "tolerances": {"round_trip": 1e-6}})
    context = runner.context(runner.load_scenario(path))
    assert context.tolerances["round_trip"] == 1e-6
    assert context.tolerances["associativity"] == runner.base_tolerances["associativity"]


def test_report_repository_writes_sorted_summary_and_series(tmp_path):
    series = [{"hbar": 0.2, "error": 1e-3}, {"hbar": 0.1, "error": 2.5e-4}]
    report = SuiteReport(
        "algebra",
        [CheckResult.upper_bound("round_trip", 1e-12, 1e-10), CheckResult.slope("star_slope", 2.0, 1.0, 0.1, series)],
        {"suite": "algebra"},
    )
    assert not report.passed
    assert report.failures == ["star_slope"]
    JsonReportRepository().save(report, tmp_path, {"wall_time_seconds": 0.0})
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["passed"] is False
    assert summary["checks"][1]["target"] == 1.0
    lines = (tmp_path / "star_slope.csv").read_text().splitlines()
    assert lines[0] == "hbar,error"
    assert len(lines) == 3
    assert not (tmp_path / "round_trip.csv").exists()


def test_container_wires_storage_settings():
    container = create_container(None)
    assert container.phase_space.csv_repository().max_points == 64
    assert container.perturbation.polynomial_repository().indent == 2
    assert isinstance(container.scenarios.scenario_runner(), ScenarioRunner)
    assert container.green.green_service().epsilons == (0.2, 0.1, 0.05)
    assert container.phase_space.binary_repository() is container.phase_space.binary_repository()
    assert container.classical.csv_repository() is not None
