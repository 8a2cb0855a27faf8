"""FastAPI application wrapping the core package.

Errors map to HTTP 400 with a machine-readable kind ("input",
"generation" or "size") so clients can translate them into exit codes
or retries without string matching.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import GenerationError, InputError, SizeError
from ..exact import min_forward_set
from ..experiments import ExperimentConfig, rows_to_csv, run_experiment, summarize
from ..graphs import gen_connected_random_geometric, gen_random_geometric, parse_edge_list, serialize_edge_list
from ..simulation import evaluate, run_algorithm, serialize_trace
from . import schemas

_ERROR_KINDS = [
    (InputError, "input"),
    (GenerationError, "generation"),
    (SizeError, "size"),
]


def create_app() -> FastAPI:
    app = FastAPI(title="adhocbcast", version=__version__)

    for exc_type, kind in _ERROR_KINDS:
        def handler(request: Request, exc: Exception, kind: str = kind) -> JSONResponse:
            return JSONResponse(
                status_code=400,
                content={"detail": {"kind": kind, "message": str(exc)}},
            )

        app.add_exception_handler(exc_type, handler)

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/graphs/generate", response_model=schemas.GraphResponse)
    def generate(req: schemas.GenerateRequest) -> schemas.GraphResponse:
        if req.connected:
            g = gen_connected_random_geometric(req.nodes, req.radius, req.seed, req.max_attempts)
        else:
            g = gen_random_geometric(req.nodes, req.radius, req.seed)
        return schemas.GraphResponse(
            nodes=g.node_count,
            edge_count=g.edge_count,
            connected=g.is_connected(),
            edge_list=serialize_edge_list(g),
        )

    @app.post("/broadcast/run", response_model=schemas.RunResponse)
    def run(req: schemas.RunRequest) -> schemas.RunResponse:
        g = parse_edge_list(req.edge_list)
        trace = run_algorithm(g, req.source, req.algorithm)
        metrics = evaluate(trace, g)
        return schemas.RunResponse(
            algorithm=req.algorithm,
            source=req.source,
            transmitters=[ev.transmitter for ev in trace.events],
            metrics=schemas.MetricsModel(
                forward_count=metrics.forward_count,
                transmission_count=metrics.transmission_count,
                delivered_count=len(metrics.delivered),
                delivered=sorted(metrics.delivered),
                coverage_ratio=metrics.coverage_ratio,
                redundant_receptions=metrics.redundant_receptions,
            ),
            trace=serialize_trace(trace) if req.include_trace else None,
        )

    @app.post("/oracle/min-forward-set", response_model=schemas.OracleResponse)
    def oracle(req: schemas.OracleRequest) -> schemas.OracleResponse:
        g = parse_edge_list(req.edge_list)
        result = min_forward_set(g, req.source, req.max_nodes)
        return schemas.OracleResponse(
            feasible=result.feasible,
            optimum_size=result.optimum_size,
            witness=list(result.witness) if result.witness is not None else None,
            explored=result.explored,
        )

    @app.post("/experiments/run", response_model=schemas.ExperimentResponse)
    def experiment(req: schemas.ExperimentRequest) -> schemas.ExperimentResponse:
        config = ExperimentConfig(
            node_counts=tuple(req.node_counts),
            graphs_per_size=req.graphs_per_size,
            radius=req.radius,
            base_seed=req.base_seed,
            fixed_source=req.fixed_source,
            sources_per_graph=req.sources_per_graph,
            algorithms=tuple(req.algorithms),
        )
        rows = run_experiment(config)
        summary = summarize(rows)
        return schemas.ExperimentResponse(
            row_count=len(rows),
            csv=rows_to_csv(rows),
            summary=[
                schemas.SummaryRowModel(
                    n_nodes=s.n_nodes,
                    algorithm=s.algorithm,
                    runs=s.runs,
                    mean_forward_count=s.mean_forward_count,
                    stddev_forward_count=s.stddev_forward_count,
                )
                for s in summary
            ],
        )

    return app
