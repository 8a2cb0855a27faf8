"""Sender-aware forward-node selection (greedy set cover over 2-hop sets).

Both pruning variants share one shape: when node v relays a packet it
received from node u, it must pick forward nodes among the neighbors that
u could not have reached, so that together they cover everything in v's
2-hop neighborhood that neither u's nor v's own transmission reaches.

    dp_universe:   two_hop(v) - closed(u) - closed(v)
    tdp_universe:  two_hop(v) - two_hop(u)    (sender piggybacks its 2-hop set)
    candidates:    closed(v) - closed(u)

The broadcast source has no sender; passing ``NO_SENDER`` (None) treats
the sender's coverage as just {v}, i.e. universe two_hop(v) - closed(v)
and candidates closed(v) - {v}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import Graph

__all__ = [
    "NO_SENDER",
    "CoverProblem",
    "ForwardSelection",
    "greedy_cover",
    "dp_universe",
    "tdp_universe",
    "candidate_set",
    "dp_forward_list",
    "tdp_forward_list",
]

# Sentinel sender for the broadcast source, which received from nobody.
NO_SENDER: int | None = None


class CoverProblem:
    """A set-cover instance: universe to cover, candidate nodes with the
    subset each would cover.

    Covers are intersected with the universe on construction and candidates
    are kept in ascending id order, which is the tie-break order during
    selection.  Candidates with empty covers are legal input; they are
    simply never selected.
    """

    __slots__ = ("universe", "candidates")

    def __init__(self, universe, candidates):
        self.universe: frozenset[int] = frozenset(universe)
        pairs = sorted((c, frozenset(cov) & self.universe) for c, cov in candidates)
        ids = [c for c, _ in pairs]
        if len(set(ids)) != len(ids):
            raise InputError("duplicate candidate id in cover problem")
        self.candidates: tuple[tuple[int, frozenset[int]], ...] = tuple(pairs)

    def __repr__(self) -> str:
        return f"CoverProblem(universe={sorted(self.universe)}, candidates={self.candidates!r})"


@dataclass(frozen=True)
class ForwardSelection:
    """Outcome of the selection process.

    nodes is the forward list in selection order (no duplicates); covered
    is the portion of the universe the list covers; complete is False when
    some universe members were coverable by no candidate.
    """

    nodes: tuple[int, ...]
    covered: frozenset[int]
    complete: bool


def greedy_cover(problem: CoverProblem) -> ForwardSelection:
    """Greedy maximum-coverage selection.

    Repeatedly pick the candidate whose residual cover set is largest
    (ties: smallest id), add it to the forward list, and subtract its
    residual set from every other candidate.  Stops when the universe is
    covered, or when no candidate covers anything new; the latter yields
    a partial result flagged complete=False.  Every selected candidate
    strictly grows the covered set.
    """
    residual = {c: set(cov) for c, cov in problem.candidates}
    order = [c for c, _ in problem.candidates]  # ascending id = tie-break order
    selected: list[int] = []
    covered: set[int] = set()
    while covered != problem.universe:
        best = None
        best_size = 0
        for c in order:
            size = len(residual[c])
            if size > best_size:
                best, best_size = c, size
        if best is None:
            break  # remaining universe is coverable by nobody
        gained = frozenset(residual[best])
        selected.append(best)
        covered |= gained
        order.remove(best)
        del residual[best]
        for c in order:
            residual[c] -= gained
    return ForwardSelection(
        nodes=tuple(selected),
        covered=frozenset(covered),
        complete=covered == problem.universe,
    )


def _check_pair(g: Graph, sender: int | None, v: int) -> None:
    g.check_node(v)
    if sender is not None:
        g.check_node(sender)


def dp_universe(g: Graph, sender: int | None, v: int) -> frozenset[int]:
    """Nodes v's forward list must cover, using 1-hop knowledge of the sender."""
    _check_pair(g, sender, v)
    if sender is NO_SENDER:
        return g.two_hop_neighbors(v) - g.closed_neighbors(v)
    return g.two_hop_neighbors(v) - g.closed_neighbors(sender) - g.closed_neighbors(v)


def tdp_universe(g: Graph, sender: int | None, v: int) -> frozenset[int]:
    """Smaller universe available when the sender piggybacks its 2-hop set.

    For adjacent (sender, v) this is always a subset of dp_universe.
    """
    _check_pair(g, sender, v)
    if sender is NO_SENDER:
        return g.two_hop_neighbors(v) - g.closed_neighbors(v)
    return g.two_hop_neighbors(v) - g.two_hop_neighbors(sender)


def candidate_set(g: Graph, sender: int | None, v: int) -> frozenset[int]:
    """Neighbors of v eligible as forward nodes: those the sender missed."""
    _check_pair(g, sender, v)
    if sender is NO_SENDER:
        return g.neighbors(v)
    return g.closed_neighbors(v) - g.closed_neighbors(sender)


def _forward_list(g: Graph, sender: int | None, v: int, universe: frozenset[int]) -> ForwardSelection:
    candidates = [(c, g.closed_neighbors(c)) for c in candidate_set(g, sender, v)]
    return greedy_cover(CoverProblem(universe, candidates))


def dp_forward_list(g: Graph, sender: int | None, v: int) -> ForwardSelection:
    """Forward list for v relaying a packet from sender (1-hop variant)."""
    return _forward_list(g, sender, v, dp_universe(g, sender, v))


def tdp_forward_list(g: Graph, sender: int | None, v: int) -> ForwardSelection:
    """Forward list for v relaying a packet from sender (2-hop variant)."""
    return _forward_list(g, sender, v, tdp_universe(g, sender, v))
