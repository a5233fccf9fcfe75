"""
weyl-lab command line: run a scenario file, list suites, print the scenario schema.

Exit codes: 0 all checks pass, 1 a check failed, 2 invalid configuration,
3 any other runtime error.
"""
import json
from pathlib import Path
from typing import Optional

import click
import yaml

from src import create_container
from src.app.scenarios.domain.scenario_config import ScenarioConfig, SuiteName
from src.app.scenarios.service.suites import SUITES
from src.app.utils.errors import CheckFailure, WeylLabError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)

SUITE_CHOICE = click.Choice([name.value for name in SuiteName])


@click.group()
@click.option("--config-file", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Lab configuration YAML (defaults to config.yml at the project root).")
@click.pass_context
def cli(ctx: click.Context, config_file: Optional[Path]):
    """Weyl-Moyal scattering lab."""
    ctx.ensure_object(dict)
    ctx.obj["config_file"] = config_file


@cli.command()
@click.argument("config", type=click.Path(dir_okay=False, path_type=Path))
@click.option("-o", "--output", type=click.Path(file_okay=False, path_type=Path), default=None,
              help="Report directory; overrides output_dir from the scenario.")
@click.pass_context
def run(ctx: click.Context, config: Path, output: Optional[Path]):
    """Run the suite described by the scenario file CONFIG."""
    try:
        runner = create_container(ctx.obj.get("config_file")).scenarios.scenario_runner()
        scenario = runner.load_scenario(config)
        report = runner.run(scenario, output)
        if not report.passed:
            raise CheckFailure(f"failed checks: {', '.join(report.failures)}")
    except WeylLabError as e:
        click.echo(f"{e.error_code}: {e}", err=True)
        ctx.exit(e.exit_code)
    except Exception as e:
        logger.exception(f"Unexpected error while running '{config}'")
        click.echo(f"runtime_error: {e}", err=True)
        ctx.exit(3)
    click.echo(f"suite '{report.suite}': {len(report.checks)} checks passed")


@cli.command("list-suites")
def list_suites():
    """List the available suites."""
    for name, suite in SUITES.items():
        click.echo(f"{name.value:<16} {suite.description}")


@cli.command("print-schema")
@click.option("--suite", type=SUITE_CHOICE, default=None,
              help="Print a complete default scenario for this suite instead of the JSON schema.")
def print_schema(suite: Optional[str]):
    """Print the scenario JSON schema, or a default scenario for one suite."""
    if suite is None:
        click.echo(json.dumps(ScenarioConfig.model_json_schema(), indent=2, sort_keys=True))
        return
    scenario = ScenarioConfig(suite=SuiteName(suite))
    click.echo(f"# {SUITES[scenario.suite].description}")
    click.echo(yaml.safe_dump(scenario.model_dump(mode="json", exclude_none=True), sort_keys=False), nl=False)


if __name__ == "__main__":
    cli()
