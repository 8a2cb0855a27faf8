"""Request and response models for the HTTP API.

Graphs travel as edge-list text (the same format the CLI reads and
writes), so any client can submit topologies without a custom encoding.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..simulation import Algorithm


class GenerateRequest(BaseModel):
    nodes: int
    radius: float
    seed: int
    connected: bool = False
    max_attempts: int = Field(default=100, ge=1)


class GraphResponse(BaseModel):
    nodes: int
    edge_count: int
    connected: bool
    edge_list: str


class MetricsModel(BaseModel):
    forward_count: int
    transmission_count: int
    delivered_count: int
    delivered: list[int]
    coverage_ratio: float
    redundant_receptions: int


class RunRequest(BaseModel):
    edge_list: str
    source: int
    algorithm: Algorithm
    include_trace: bool = False


class RunResponse(BaseModel):
    algorithm: Algorithm
    source: int
    transmitters: list[int]
    metrics: MetricsModel
    trace: str | None = None


class OracleRequest(BaseModel):
    edge_list: str
    source: int
    max_nodes: int = Field(default=12, ge=1)


class OracleResponse(BaseModel):
    feasible: bool
    optimum_size: int | None
    witness: list[int] | None
    explored: int


class ExperimentRequest(BaseModel):
    node_counts: list[int] = [5, 10, 15, 20, 25, 30]
    graphs_per_size: int = 100
    radius: float | None = None
    base_seed: int = 1
    fixed_source: int | None = None
    sources_per_graph: int = 3
    algorithms: list[Algorithm] = [Algorithm.FLOOD, Algorithm.DP, Algorithm.TDP, Algorithm.PROB]


class SummaryRowModel(BaseModel):
    n_nodes: int
    algorithm: str
    runs: int
    mean_forward_count: float
    stddev_forward_count: float


class ExperimentResponse(BaseModel):
    row_count: int
    csv: str
    summary: list[SummaryRowModel]
