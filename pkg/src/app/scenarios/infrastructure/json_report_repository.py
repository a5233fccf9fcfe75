import csv
import json
from pathlib import Path
from typing import Union

from src.app.scenarios.domain.check_result import SuiteReport
from src.app.scenarios.domain.repositories import ReportRepository
from src.app.utils.errors import SerializationError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)

SUMMARY_FILE = "summary.json"
METADATA_FILE = "metadata.json"


class JsonReportRepository(ReportRepository):
    """
    summary.json (sorted keys) and one CSV per check with a series; wall time,
    timestamps and library versions go to metadata.json so the other files are
    byte-identical across runs of the same config.
    """

    def __init__(self, indent: int = 2):
        self.indent = indent

    def _dump(self, payload: dict, path: Path) -> None:
        with open(path, "w") as f:
            json.dump(payload, f, indent=self.indent, sort_keys=True)
            f.write("\n")

    def save(self, report: SuiteReport, output_dir: Union[str, Path], metadata: dict) -> Path:
        output_dir = Path(output_dir)
        try:
            output_dir.mkdir(parents=True, exist_ok=True)
            self._dump(report.summary(), output_dir / SUMMARY_FILE)
            for check in report.checks:
                if not check.series:
                    continue
                columns = list(check.series[0])
                with open(output_dir / f"{check.name}.csv", "w", newline="") as f:
                    writer = csv.DictWriter(f, fieldnames=columns, lineterminator="\n")
                    writer.writeheader()
                    writer.writerows({k: repr(v) if isinstance(v, float) else v for k, v in row.items()}
                                     for row in check.series)
            self._dump(metadata, output_dir / METADATA_FILE)
        except (OSError, TypeError, ValueError) as e:
            logger.error(f"Error writing report to {output_dir}: {e}")
            raise SerializationError(f"failed to write report to {output_dir}: {e}") from e
        logger.info(f"Report for suite '{report.suite}' written to {output_dir}")
        return output_dir
