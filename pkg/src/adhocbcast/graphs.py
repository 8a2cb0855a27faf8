"""Undirected simple graphs modelling ad hoc wireless network topologies.

Nodes are dense integer ids 0..n-1.  An edge (u, v) means u and v are
inside each other's transmitter range, so a transmission by u is heard
by every neighbor of u.  Neighborhood sets follow the closed convention:
``closed_neighbors(u)`` includes u itself, and the two-hop set is the
union of closed neighborhoods over ``closed_neighbors(u)``.

All set-valued results are frozensets; wherever order matters downstream
(tie-breaking, serialization) callers iterate in ascending id order, so
every algorithm built on top of this module is deterministic.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Iterable, Iterator

from .errors import GenerationError, InputError, ParseError

__all__ = [
    "Graph",
    "gen_random_geometric",
    "gen_connected_random_geometric",
    "parse_edge_list",
    "serialize_edge_list",
]


class Graph:
    """Immutable undirected simple graph (no self-loops, no multi-edges)."""

    __slots__ = ("_n", "_adj", "_closed", "_two_hop")

    def __init__(self, node_count: int, edges: Iterable[tuple[int, int]] = ()):
        if node_count < 0:
            raise InputError(f"node_count must be non-negative, got {node_count}")
        adj: list[set[int]] = [set() for _ in range(node_count)]
        for u, v in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise InputError(f"edge ({u}, {v}) references a node outside [0, {node_count})")
            if u == v:
                raise InputError(f"self-loop at node {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._n = node_count
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self._closed: tuple[frozenset[int], ...] = tuple(
            self._adj[u] | {u} for u in range(node_count)
        )
        self._two_hop: dict[int, frozenset[int]] = {}

    @property
    def node_count(self) -> int:
        return self._n

    @property
    def nodes(self) -> range:
        return range(self._n)

    def check_node(self, u: int) -> None:
        if not (0 <= u < self._n):
            raise InputError(f"node id {u} outside [0, {self._n})")

    def neighbors(self, u: int) -> frozenset[int]:
        """Open neighborhood of u (excludes u)."""
        self.check_node(u)
        return self._adj[u]

    def closed_neighbors(self, u: int) -> frozenset[int]:
        """Neighbors of u plus u itself."""
        self.check_node(u)
        return self._closed[u]

    def two_hop_neighbors(self, u: int) -> frozenset[int]:
        """Union of closed neighborhoods over the closed neighborhood of u.

        Always a superset of ``closed_neighbors(u)``.  Memoized; graphs are
        immutable so the cache never goes stale.
        """
        self.check_node(u)
        cached = self._two_hop.get(u)
        if cached is None:
            cached = frozenset().union(*(self._closed[v] for v in self._closed[u]))
            self._two_hop[u] = cached
        return cached

    def degree(self, u: int) -> int:
        self.check_node(u)
        return len(self._adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        self.check_node(u)
        self.check_node(v)
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return sorted((u, v) for u in self.nodes for v in self._adj[u] if u < v)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def reachable_from(self, source: int) -> frozenset[int]:
        """All nodes reachable from source via edges, including source."""
        self.check_node(source)
        seen = {source}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in self._adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return frozenset(seen)

    def hop_distances(self, source: int) -> dict[int, int]:
        """BFS hop distance from source for every reachable node."""
        self.check_node(source)
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in self._adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def is_connected(self) -> bool:
        """True iff every node is reachable from node 0.

        Zero- and one-node graphs count as connected.
        """
        if self._n <= 1:
            return True
        return len(self.reachable_from(0)) == self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __iter__(self) -> Iterator[int]:
        return iter(range(self._n))

    def __repr__(self) -> str:
        return f"Graph(node_count={self._n}, edges={self.edges()!r})"


def gen_random_geometric(n: int, radius: float, seed: int) -> Graph:
    """Random geometric graph: n points uniform in the unit square, an edge
    wherever the Euclidean distance is <= radius.

    Pure function of (n, radius, seed): the same arguments always produce
    the identical graph (``random.Random`` output is stable across Python
    versions).
    """
    if n < 1:
        raise InputError(f"need at least one node, got n={n}")
    if radius <= 0:
        raise InputError(f"radius must be positive, got {radius}")
    rng = random.Random(seed)
    points = [(rng.random(), rng.random()) for _ in range(n)]
    r2 = radius * radius
    edges = []
    for u in range(n):
        xu, yu = points[u]
        for v in range(u + 1, n):
            dx = xu - points[v][0]
            dy = yu - points[v][1]
            if dx * dx + dy * dy <= r2:
                edges.append((u, v))
    return Graph(n, edges)


def gen_connected_random_geometric(
    n: int, radius: float, seed: int, max_attempts: int = 100
) -> Graph:
    """Retry gen_random_geometric with seed, seed+1, ... until connected.

    Raises GenerationError (reporting the last seed tried) once
    max_attempts graphs have all come out disconnected.
    """
    if max_attempts < 1:
        raise InputError(f"max_attempts must be >= 1, got {max_attempts}")
    for attempt in range(max_attempts):
        g = gen_random_geometric(n, radius, seed + attempt)
        if g.is_connected():
            return g
    last = seed + max_attempts - 1
    raise GenerationError(
        f"no connected graph for n={n}, radius={radius} after {max_attempts} "
        f"attempts (seeds {seed}..{last})",
        last_seed=last,
    )


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    First significant line is the node count n; each following non-empty
    line is "u v" with 0 <= u < v < n.  Blank lines and lines starting
    with '#' are ignored.  Malformed lines, out-of-range ids, self-loops
    and duplicate edges raise ParseError with the 1-based line number.
    """
    node_count: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if node_count is None:
            try:
                node_count = int(line)
            except ValueError:
                raise ParseError(f"expected node count, got {line!r}", lineno) from None
            if node_count < 0:
                raise ParseError(f"node count must be non-negative, got {node_count}", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
        if u == v:
            raise ParseError(f"self-loop at node {u}", lineno)
        if not (0 <= u < v < node_count):
            raise ParseError(
                f"edge ({u}, {v}) must satisfy 0 <= u < v < {node_count}", lineno
            )
        if (u, v) in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno)
        seen.add((u, v))
        edges.append((u, v))
    if node_count is None:
        raise ParseError("missing node count line", 1)
    return Graph(node_count, edges)


def serialize_edge_list(g: Graph) -> str:
    """Canonical edge-list text: node count, then edges sorted with u < v.

    Round-trips exactly: parse_edge_list(serialize_edge_list(g)) == g.
    """
    lines = [str(g.node_count)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
