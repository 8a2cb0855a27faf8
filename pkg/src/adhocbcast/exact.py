"""Exact brute-force solvers for small instances.

Ground truth for the greedy algorithms: minimum forward set for a
broadcast, and minimum set cover.  Both search by increasing cardinality
and enumerate candidate subsets in lexicographic order, so the returned
witness is the lexicographically smallest optimum.  Exponential; hard
caps keep them honest.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InputError, SizeError
from .graphs import Graph
from .simulation import delivered_by_forward_set

__all__ = ["OracleResult", "min_forward_set", "min_set_cover"]

DEFAULT_MAX_NODES = 12
DEFAULT_MAX_SUBSETS = 20


@dataclass(frozen=True)
class OracleResult:
    """Result of an exhaustive search.

    witness is one optimal solution (node ids for min_forward_set, subset
    indices for min_set_cover); explored counts candidate subsets
    examined.  feasible=False means no solution exists at all, and then
    optimum_size and witness are None.
    """

    optimum_size: int | None
    witness: tuple[int, ...] | None
    explored: int
    feasible: bool = True


def min_forward_set(g: Graph, source: int, max_nodes: int = DEFAULT_MAX_NODES) -> OracleResult:
    """Minimum set F of non-source nodes whose relaying delivers everywhere.

    Feasibility of each candidate F is judged by the same broadcast
    machinery the simulator uses: members of F only transmit once the
    packet actually reaches them through earlier transmitters.  Requires
    a connected graph; refuses instances above max_nodes.
    """
    g.check_node(source)
    if not g.is_connected():
        raise InputError("min_forward_set requires a connected graph")
    if g.node_count > max_nodes:
        raise SizeError(
            f"graph has {g.node_count} nodes, exceeding the exact-search cap {max_nodes}"
        )
    everyone = frozenset(g.nodes)
    others = [v for v in g.nodes if v != source]
    explored = 0
    for k in range(len(others) + 1):
        for candidate in combinations(others, k):
            explored += 1
            if delivered_by_forward_set(g, source, candidate) == everyone:
                return OracleResult(optimum_size=k, witness=candidate, explored=explored)
    # unreachable on a connected graph: F = all other nodes always works
    raise AssertionError("no feasible forward set found on a connected graph")


def min_set_cover(
    universe, subsets, max_subsets: int = DEFAULT_MAX_SUBSETS
) -> OracleResult:
    """Minimum number of the given subsets whose union covers the universe.

    witness holds the chosen subset indices.  When even the union of all
    subsets misses part of the universe the result is flagged infeasible
    rather than raising.
    """
    subsets = [frozenset(s) for s in subsets]
    if len(subsets) > max_subsets:
        raise SizeError(
            f"{len(subsets)} subsets exceed the exact-search cap {max_subsets}"
        )
    universe = frozenset(universe)
    coverable = frozenset().union(*subsets) if subsets else frozenset()
    if not universe <= coverable:
        return OracleResult(optimum_size=None, witness=None, explored=0, feasible=False)
    explored = 0
    for k in range(len(subsets) + 1):
        for picked in combinations(range(len(subsets)), k):
            explored += 1
            covered: frozenset[int] = frozenset()
            for i in picked:
                covered |= subsets[i]
            if universe <= covered:
                return OracleResult(optimum_size=k, witness=picked, explored=explored)
    raise AssertionError("feasibility pre-check passed but search found no cover")
