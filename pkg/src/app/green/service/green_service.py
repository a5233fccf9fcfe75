from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

from src.app.config.core import resolve_tolerances
from src.app.dynamics.domain.hamiltonian import QuadraticHamiltonian
from src.app.dynamics.domain.potential import PotentialSpec
from src.app.green.domain.green_request import GreenRequest, GreenResult
from src.app.green.infrastructure.csv_convergence_repository import CsvConvergenceRepository
from src.app.green.service.green_functions import MomentReport, feynman_moment_check, green_function
from src.app.phase_space.domain.grid import PhaseSpaceGrid
from src.app.utils.logger import get_logger

logger = get_logger(__name__)


class GreenService:
    """
    Green-function estimation with the lab's ladders, worker count and
    tolerance table.
    """

    def __init__(self, convergence_repository: CsvConvergenceRepository, config: Optional[dict] = None):
        self.convergence_repository = convergence_repository
        self.config = config if config else {}
        green_cfg = self.config.get("green", {})
        self.epsilons = tuple(green_cfg.get("epsilons", (0.2, 0.1, 0.05)))
        self.sigmas = tuple(green_cfg.get("sigmas", (0.4, 0.2, 0.1)))
        self.route = green_cfg.get("route", "star")
        self.max_workers = int(self.config.get("runtime", {}).get("max_workers", 1))
        self.tolerances = resolve_tolerances(self.config.get("tolerances"))

    def request(
        self,
        times: Sequence[float],
        base: PotentialSpec,
        hamiltonian: QuadraticHamiltonian,
        grid: PhaseSpaceGrid,
        steps: int,
    ) -> GreenRequest:
        return GreenRequest(
            times=tuple(times),
            base=base,
            hamiltonian=hamiltonian,
            grid=grid,
            steps=steps,
            epsilons=self.epsilons,
            sigmas=self.sigmas,
            route=self.route,
        )

    def estimate(self, request: GreenRequest, table_path: Optional[Union[str, Path]] = None) -> GreenResult:
        result = green_function(request, self.max_workers, self.tolerances)
        if table_path is not None:
            self.convergence_repository.save(result.rows, table_path)
            logger.info(f"Convergence table written to {table_path}")
        return result

    def moment_check(
        self,
        times: Tuple[float, float],
        base: PotentialSpec,
        hamiltonian: QuadraticHamiltonian,
        grid: PhaseSpaceGrid,
        steps: int,
        mass: float = 1.0,
    ) -> MomentReport:
        return feynman_moment_check(
            times,
            base,
            hamiltonian,
            grid,
            steps,
            mass=mass,
            epsilons=self.epsilons,
            sigmas=self.sigmas,
            route=self.route,
            max_workers=self.max_workers,
            tolerances=self.tolerances,
        )
