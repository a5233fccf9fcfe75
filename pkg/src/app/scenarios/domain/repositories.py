from abc import ABC, abstractmethod
from pathlib import Path
from typing import Union

from .check_result import SuiteReport


class ReportRepository(ABC):
    """
    Repository for suite reports.
    """

    @abstractmethod
    def save(self, report: SuiteReport, output_dir: Union[str, Path], metadata: dict) -> Path:
        """
        Writes the deterministic summary and series files plus a separate
        metadata file for run-dependent facts.

        Returns:
            The directory written.

        Raises:
            SerializationError: If a report file cannot be written.
        """
        pass
