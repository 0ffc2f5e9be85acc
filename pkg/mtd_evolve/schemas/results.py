from typing import Any, Dict, List

from pydantic import Field

from .base import BaseSchema


class GenerationStats(BaseSchema):
    """Population aggregates of one generation."""

    generation: int = Field(ge=1)
    mean_fitness: float
    best_fitness: float
    mean_transitions: float
    mean_payoff: float
    mean_izda: float
    mean_izdb: float
    investment_bias: float = Field(ge=-1, le=1)

    def row(self, run: int) -> Dict[str, Any]:
        return {"run": run, **self.model_dump()}


class Manifest(BaseSchema):
    schema_version: int
    package_version: str
    kind: str = Field(description="experiment or suite")
    master_seed: int
    experiment_seed: int
    config: Dict[str, Any]
    files: List[str]
    seeds: Dict[str, int] = Field(
        default_factory=dict, description="Derived seed of every suite member"
    )
