"""Command-line front end.

Every command is a thin client of the HTTP API: it builds a request,
sends it to the service (in-process by default, or a remote instance
via --server URL), and formats the response.  File handling stays on
the client side, so graphs and CSV results live wherever the caller
runs.

Exit codes: 0 success, 1 input error, 2 generation or size error.
"""

from __future__ import annotations

import argparse
import asyncio
import sys

import httpx

from .experiments import SummaryRow, format_summary
from .simulation import Algorithm

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GENERATION = 2

_ALGORITHM_NAMES = [a.value for a in Algorithm]


class CommandError(Exception):
    """Failure with a CLI exit code attached."""

    def __init__(self, message: str, exit_code: int = EXIT_INPUT):
        super().__init__(message)
        self.exit_code = exit_code


class ServiceClient:
    """Sends API requests either in-process or to a remote server."""

    def __init__(self, server: str | None = None):
        self._server = server
        self._app = None

    def post(self, path: str, payload: dict) -> dict:
        if self._server is not None:
            try:
                with httpx.Client(base_url=self._server, timeout=None) as client:
                    response = client.post(path, json=payload)
            except httpx.HTTPError as exc:
                raise CommandError(f"cannot reach {self._server}: {exc}") from exc
        else:
            response = asyncio.run(self._post_in_process(path, payload))
        return self._parse(response)

    async def _post_in_process(self, path: str, payload: dict) -> httpx.Response:
        if self._app is None:
            from .service import create_app

            self._app = create_app()
        transport = httpx.ASGITransport(app=self._app)
        async with httpx.AsyncClient(transport=transport, base_url="http://service") as client:
            return await client.post(path, json=payload, timeout=None)

    @staticmethod
    def _parse(response: httpx.Response) -> dict:
        if response.status_code == 200:
            return response.json()
        try:
            detail = response.json().get("detail")
        except ValueError:
            detail = None
        if isinstance(detail, dict):
            kind = detail.get("kind", "input")
            code = EXIT_GENERATION if kind in ("generation", "size") else EXIT_INPUT
            raise CommandError(detail.get("message", "request failed"), code)
        if isinstance(detail, list):  # pydantic validation report
            parts = [
                "{}: {}".format(".".join(str(p) for p in item.get("loc", [])), item.get("msg"))
                for item in detail
            ]
            raise CommandError("invalid request: " + "; ".join(parts))
        raise CommandError(f"service error (HTTP {response.status_code})")


def _read_graph_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CommandError(f"cannot read graph file {path}: {exc}") from exc


def _parse_node_counts(text: str) -> list[int]:
    """Accept '5:30:5' (inclusive range), '12', or '5,8,13'."""
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) != 3:
                raise ValueError
            start, stop, step = parts
            if step < 1:
                raise ValueError
            return list(range(start, stop + 1, step))
        if "," in text:
            return [int(p) for p in text.split(",") if p]
        return [int(text)]
    except ValueError:
        raise CommandError(f"cannot parse node counts {text!r}; use START:STOP:STEP, N, or N1,N2,...") from None


def _parse_source_mode(text: str) -> tuple[int | None, int]:
    """Accept 'random:K' or 'fixed:ID'; returns (fixed_source, sources_per_graph)."""
    kind, _, value = text.partition(":")
    try:
        number = int(value)
    except ValueError:
        raise CommandError(f"cannot parse source mode {text!r}; use random:K or fixed:ID") from None
    if kind == "random":
        return None, number
    if kind == "fixed":
        return number, 1
    raise CommandError(f"unknown source mode {kind!r}; use random:K or fixed:ID")


def _parse_algorithms(text: str) -> list[str]:
    names = [p.strip() for p in text.split(",") if p.strip()]
    for name in names:
        if name not in _ALGORITHM_NAMES:
            raise CommandError(
                f"unknown algorithm {name!r}; choose from {', '.join(_ALGORITHM_NAMES)}"
            )
    if not names:
        raise CommandError("at least one algorithm is required")
    return names


def _parse_radius(text: str) -> float | None:
    if text == "auto":
        return None
    try:
        return float(text)
    except ValueError:
        raise CommandError(f"cannot parse radius {text!r}; use a number or 'auto'") from None


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_gen(args: argparse.Namespace, client: ServiceClient) -> int:
    body = client.post(
        "/graphs/generate",
        {
            "nodes": args.nodes,
            "radius": args.radius,
            "seed": args.seed,
            "connected": args.connected,
            "max_attempts": args.max_attempts,
        },
    )
    _write_text(args.out, body["edge_list"])
    if args.out is not None:
        print(
            f"wrote {body['nodes']} nodes, {body['edge_count']} edges "
            f"(connected={str(body['connected']).lower()}) to {args.out}"
        )
    return EXIT_OK


def cmd_run(args: argparse.Namespace, client: ServiceClient) -> int:
    body = client.post(
        "/broadcast/run",
        {
            "edge_list": _read_graph_file(args.graph),
            "source": args.source,
            "algorithm": args.algorithm,
            "include_trace": args.trace,
        },
    )
    metrics = body["metrics"]
    print(f"algorithm={body['algorithm']}")
    print(f"source={body['source']}")
    print("transmitters=" + ",".join(str(t) for t in body["transmitters"]))
    print(f"forward_count={metrics['forward_count']}")
    print(f"transmission_count={metrics['transmission_count']}")
    print(f"delivered_count={metrics['delivered_count']}")
    print(f"coverage_ratio={metrics['coverage_ratio']:.6f}")
    print(f"redundant_receptions={metrics['redundant_receptions']}")
    if args.trace:
        sys.stdout.write(body["trace"])
    return EXIT_OK


def cmd_experiment(args: argparse.Namespace, client: ServiceClient) -> int:
    fixed_source, sources_per_graph = _parse_source_mode(args.source)
    body = client.post(
        "/experiments/run",
        {
            "node_counts": _parse_node_counts(args.nodes),
            "graphs_per_size": args.graphs_per_size,
            "radius": _parse_radius(args.radius),
            "base_seed": args.seed,
            "fixed_source": fixed_source,
            "sources_per_graph": sources_per_graph,
            "algorithms": _parse_algorithms(args.algorithms),
        },
    )
    _write_text(args.out, body["csv"])
    if args.out is not None:
        print(f"wrote {body['row_count']} rows to {args.out}")
    if args.summary:
        rows = [SummaryRow(**item) for item in body["summary"]]
        sys.stdout.write(format_summary(rows))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace, client: ServiceClient) -> int:
    body = client.post(
        "/oracle/min-forward-set",
        {
            "edge_list": _read_graph_file(args.graph),
            "source": args.source,
            "max_nodes": args.max_nodes,
        },
    )
    print(f"feasible={str(body['feasible']).lower()}")
    print(f"optimum_size={body['optimum_size']}")
    witness = body["witness"]
    print("witness=" + (",".join(str(v) for v in witness) if witness is not None else "none"))
    print(f"explored={body['explored']}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adhocbcast",
        description="Broadcast forward-node selection over ad hoc network graphs.",
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="send requests to a running service instead of in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a random geometric graph as edge-list text")
    p_gen.add_argument("--nodes", type=int, required=True)
    p_gen.add_argument("--radius", type=float, required=True)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--connected", action="store_true", help="retry seeds until connected")
    p_gen.add_argument("--max-attempts", type=int, default=100)
    p_gen.add_argument("--out", metavar="FILE", default=None, help="write here instead of stdout")

    p_run = sub.add_parser("run", help="run one broadcast and print its metrics")
    p_run.add_argument("--graph", metavar="FILE", required=True)
    p_run.add_argument("--source", type=int, required=True)
    p_run.add_argument("--algorithm", choices=_ALGORITHM_NAMES, required=True)
    p_run.add_argument("--trace", action="store_true", help="also print the event trace")

    p_exp = sub.add_parser("experiment", help="run a comparison sweep and emit CSV")
    p_exp.add_argument("--nodes", default="5:30:5", help="START:STOP:STEP, N, or N1,N2,...")
    p_exp.add_argument("--graphs-per-size", type=int, default=100)
    p_exp.add_argument("--radius", default="auto", help="number, or 'auto' to scale with size")
    p_exp.add_argument("--seed", type=int, default=1)
    p_exp.add_argument("--source", default="random:3", help="random:K or fixed:ID")
    p_exp.add_argument("--algorithms", default="flood,dp,tdp,prob")
    p_exp.add_argument("--out", metavar="FILE", default=None, help="write CSV here instead of stdout")
    p_exp.add_argument("--summary", action="store_true", help="print a mean/stddev table")

    p_oracle = sub.add_parser("oracle", help="exact minimum forward set (small graphs only)")
    p_oracle.add_argument("--graph", metavar="FILE", required=True)
    p_oracle.add_argument("--source", type=int, required=True)
    p_oracle.add_argument("--max-nodes", type=int, default=12)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "serve":
            return cmd_serve(args)
        client = ServiceClient(args.server)
        handler = {
            "gen": cmd_gen,
            "run": cmd_run,
            "experiment": cmd_experiment,
            "oracle": cmd_oracle,
        }[args.command]
        return handler(args, client)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
