"""
Schemas for data validation and serialization.
"""
import enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.services.loaders import GraphFormat

MAX_SEED = 2 ** 64 - 1


class PruneMode(str, enum.Enum):
    """Pruning scenarios."""
    EDGE_REMOVAL = "edges"
    NODE_ISOLATION = "nodes"


class MetricName(str, enum.Enum):
    """Distances computed between an original graph and its pruned copy."""
    D_A = "dA"
    D_L = "dL"
    D_NL = "dNL"
    D_ROOT_ED = "dRootED"
    SIM_DC = "simDC"
    EDIT = "edit"
    SPD = "spd"


DEFAULT_METRICS = [
    MetricName.D_A,
    MetricName.D_L,
    MetricName.D_NL,
    MetricName.D_ROOT_ED,
    MetricName.SIM_DC,
]


def fraction_grid(torem_max: float = 0.10, steps: int = 10) -> List[float]:
    """Evenly spaced fractions ``torem_max * i / steps`` for ``i = 1..steps``."""
    if steps < 1:
        raise ValueError("steps must be at least 1")
    return [round(torem_max * i / steps, 12) for i in range(1, steps + 1)]


# Pruning schemas
class PruneSpec(BaseModel):
    """One pruning request."""
    model_config = ConfigDict(frozen=True)

    mode: PruneMode
    fraction: float = Field(..., gt=0.0, le=1.0, description="Fraction of elements to remove")
    seed: int = Field(0, ge=0, le=MAX_SEED, description="64-bit seed of the random stream")


# Experiment schemas
class NetworkSource(BaseModel):
    """A network entry of an experiment."""
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1)
    path: str = Field(..., min_length=1)
    format: GraphFormat = GraphFormat.EDGE_LIST
    symmetrize: bool = Field(False, description="Fold a directed 1-mode matrix into an undirected graph")


class ExperimentConfig(BaseModel):
    """Parameters of a pruning experiment."""
    model_config = ConfigDict(frozen=True)

    networks: List[NetworkSource] = Field(..., min_length=1)
    mode: PruneMode = PruneMode.EDGE_REMOVAL
    fractions: List[float] = Field(default_factory=fraction_grid, min_length=1)
    nrep: int = Field(100, ge=1)
    base_seed: int = Field(0, ge=0, le=MAX_SEED)
    metrics: List[MetricName] = Field(default_factory=lambda: list(DEFAULT_METRICS), min_length=1)
    output_path: str = "results.csv"
    json_output_path: Optional[str] = None
    workers: int = Field(1, ge=1)
    delimiter: str = ","

    @field_validator("fractions")
    @classmethod
    def fractions_increasing(cls, v: List[float]) -> List[float]:
        for f in v:
            if not 0.0 < f <= 1.0:
                raise ValueError(f"fraction {f} outside (0, 1]")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("fractions must be strictly increasing")
        return v

    @field_validator("metrics")
    @classmethod
    def metrics_unique(cls, v: List[MetricName]) -> List[MetricName]:
        if len(set(v)) != len(v):
            raise ValueError("metrics must not repeat")
        return v

    @field_validator("networks")
    @classmethod
    def network_names_unique(cls, v: List[NetworkSource]) -> List[NetworkSource]:
        names = [source.name for source in v]
        if len(set(names)) != len(names):
            raise ValueError("network names must be unique")
        return v


class ExperimentRecord(BaseModel):
    """Aggregated distance for one (network, mode, fraction, metric) cell."""
    model_config = ConfigDict(frozen=True)

    network: str
    mode: PruneMode
    fraction: float
    metric: MetricName
    mean: float
    std: float = Field(..., ge=0.0)
    nrep: int = Field(..., ge=1)
    base_seed: int = Field(..., ge=0, le=MAX_SEED)
