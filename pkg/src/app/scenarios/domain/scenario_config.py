from enum import Enum
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.app.config.default_settings import DEFAULT_TOLERANCES
from src.app.dynamics.domain.hamiltonian import ConfinementWindow
from src.app.dynamics.domain.potential import GaussianPulse, PotentialSpec, PulseTrain
from src.app.phase_space.domain.grid import PhaseSpaceGrid, balanced_grid, make_grid


class SuiteName(str, Enum):
    ALGEBRA = "algebra"
    SCATTERING = "scattering"
    CAUSALITY = "causality"
    GREEN = "green"
    PV_KERNEL = "pv-kernel"
    CLASSICAL_LIMIT = "classical-limit"
    COVARIANT = "covariant"


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class PulseModel(StrictModel):
    center: float
    width: float = Field(..., gt=0)
    peak: float

    def to_pulse(self) -> GaussianPulse:
        return GaussianPulse(self.center, self.width, self.peak)


def _train(pulses: List[PulseModel]) -> PulseTrain:
    return PulseTrain(tuple(p.to_pulse() for p in pulses))


class GridModel(StrictModel):
    """Phase-space grid; ``half_extent`` None selects the balanced grid."""
    points: int = Field(64, ge=8, le=512)
    hbar: float = Field(1.0, gt=0)
    half_extent: Optional[float] = Field(None, gt=0)
    hbars: List[float] = Field(default_factory=lambda: [0.4, 0.2, 0.1, 0.05])

    @field_validator("points")
    @classmethod
    def even_points(cls, value: int) -> int:
        if value % 2:
            raise ValueError(f"points must be even, got {value}")
        return value

    @field_validator("hbars")
    @classmethod
    def positive_ladder(cls, value: List[float]) -> List[float]:
        if len(value) < 2 or any(h <= 0 for h in value) or len(set(value)) != len(value):
            raise ValueError("hbars needs at least two distinct positive values")
        return value

    def build(self) -> PhaseSpaceGrid:
        if self.half_extent is None:
            return balanced_grid(self.points, self.hbar)
        return make_grid(self.half_extent, self.points, self.hbar)


class PotentialModel(StrictModel):
    start: float = -6.0
    end: float = 6.0
    quartic: List[PulseModel] = Field(default_factory=list)
    source: List[PulseModel] = Field(default_factory=list)

    @model_validator(mode="after")
    def ordered_window(self) -> "PotentialModel":
        if not self.end > self.start:
            raise ValueError(f"potential window [{self.start}, {self.end}] is empty")
        return self

    def build(self, confinement: ConfinementWindow) -> PotentialSpec:
        return PotentialSpec(self.start, self.end, _train(self.quartic), _train(self.source), confinement=confinement)


class ScatteringModel(StrictModel):
    steps: int = Field(400, ge=1)
    convergence_steps: List[int] = Field(default_factory=list)
    window_shift: Optional[float] = Field(None, ge=0)


class CausalityModel(StrictModel):
    """Early pulses act before ``split_time``; alternate quartic pulses act after it in run b only."""
    split_time: float = 0.0
    early: List[PulseModel] = Field(default_factory=list)
    alternate: List[PulseModel] = Field(default_factory=list)

    @model_validator(mode="after")
    def split_pulses(self) -> "CausalityModel":
        for pulse in self.early:
            if pulse.to_pulse().support()[1] >= self.split_time:
                raise ValueError(f"early pulse at {pulse.center} reaches past split_time {self.split_time}")
        for pulse in self.alternate:
            if pulse.to_pulse().support()[0] <= self.split_time:
                raise ValueError(f"alternate pulse at {pulse.center} starts before split_time {self.split_time}")
        return self


class GreenModel(StrictModel):
    times: Tuple[float, float] = (-1.0, 1.0)
    epsilons: List[float] = Field(default_factory=lambda: [0.2, 0.1, 0.05])
    sigmas: List[float] = Field(default_factory=lambda: [0.4, 0.2, 0.1])
    route: Literal["hilbert", "star"] = "star"


class PvKernelModel(StrictModel):
    nodes: int = Field(6, ge=2, le=12)
    orders: Tuple[int, int] = (2, 4)
    energies: List[float] = Field(default_factory=lambda: [0.0, 0.25, 0.4, 1.6, 2.0, 3.0])


class SurfaceModel(StrictModel):
    kind: Literal["flat", "tilted"] = "flat"
    slope: float = Field(0.0, gt=-1, lt=1)
    nodes: int = Field(64, ge=3)
    extent: float = Field(6.0, gt=0)


class CovariantModel(StrictModel):
    surface: SurfaceModel = Field(default_factory=SurfaceModel)
    lattice_sites: int = Field(256, ge=8)
    lattice_length: float = Field(20.0, gt=0)
    duration: float = Field(10.0, gt=0)
    lattice_steps: int = Field(10000, ge=1)
    mode: int = Field(3, ge=1)
    duffing_steps: int = Field(4000, ge=1)


class ScenarioConfig(StrictModel):
    """
    One reproducible suite run. Unknown keys are rejected at every level.
    """
    suite: SuiteName
    mass: float = Field(1.0, gt=0)
    grid: GridModel = Field(default_factory=GridModel)
    potential: PotentialModel = Field(default_factory=PotentialModel)
    scattering: ScatteringModel = Field(default_factory=ScatteringModel)
    causality: CausalityModel = Field(default_factory=CausalityModel)
    green: GreenModel = Field(default_factory=GreenModel)
    pv_kernel: PvKernelModel = Field(default_factory=PvKernelModel)
    covariant: CovariantModel = Field(default_factory=CovariantModel)
    tolerances: Dict[str, float] = Field(default_factory=dict)
    output_dir: Optional[str] = None

    @field_validator("tolerances")
    @classmethod
    def known_tolerances(cls, value: Dict[str, float]) -> Dict[str, float]:
        unknown = sorted(set(value) - set(DEFAULT_TOLERANCES))
        if unknown:
            raise ValueError(f"unknown tolerance keys: {', '.join(unknown)}")
        return value
