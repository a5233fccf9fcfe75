from typing import List

from pydantic import BaseModel, ConfigDict, Field


class TermRecord(BaseModel):
    hbar_power: int
    insertions: List[int]
    re: float
    im: float

    model_config = ConfigDict(extra="forbid")


class PolynomialDocument(BaseModel):
    """Text form of a FunctionalPolynomial; terms sorted by (hbar power, insertions)."""
    format: str = Field(default="weyl-lab/functional-polynomial/1")
    max_degree: int = Field(..., ge=0)
    node_times: List[float] = Field(default_factory=list)
    terms: List[TermRecord] = Field(default_factory=list)

    model_config = ConfigDict(extra="forbid")
