"""Probability-based forward-node selection.

Each candidate neighbor i of the acting source gets a probability value
1/n_i, where n_i counts the still-uncovered nodes i would newly reach:

    n_i = |(closed(i) - closed(acting source)) & uncovered|

The neighbor with the smallest finite value (equivalently the largest
n_i, smallest id on ties) is selected to forward.  A node whose count
drops to zero gets probability infinity, which is absorbing: it can
never be selected afterwards.  When the acting source runs out of
selectable neighbors it delegates the acting-source role depth-first
along its forward list; the run ends when the uncovered list is empty
or the original source regains control with nothing left to select.

The bookkeeping (uncovered list, per-forward covered lists, probability
values) lives in one shared ProbState.  A real deployment would gossip
these values around; with a static topology and instant propagation the
shared state is behaviorally identical, so the simulation uses it
directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InputError
from .graphs import Graph

__all__ = [
    "INFINITY",
    "ProbState",
    "ProbResult",
    "initial_state",
    "coverage_count",
    "prob_value",
    "select_forward",
    "apply_forward",
    "run_prob_broadcast",
]

INFINITY = math.inf


@dataclass
class ProbState:
    """Mutable working state of one probabilistic broadcast run.

    prob maps node id to its current value (1/k for positive k, or
    INFINITY once absorbed); uncovered is the global list of nodes not
    yet reached; covered_by records the set each forward node newly
    covered; forward_lists records the forwards each acting source
    selected, in selection order.
    """

    prob: dict[int, float]
    uncovered: set[int]
    covered_by: dict[int, frozenset[int]] = field(default_factory=dict)
    forward_lists: dict[int, list[int]] = field(default_factory=dict)


@dataclass(frozen=True)
class ProbResult:
    """Outcome of a full run.

    forward_sequence lists every transmitter in selection order, the
    original source first; every later member is adjacent to an earlier
    one.  fully_covered tells which termination condition fired: the
    uncovered list ran empty, or selections were exhausted with nodes
    still uncovered (possible only on disconnected topologies).
    """

    forward_sequence: tuple[int, ...]
    delivered: frozenset[int]
    fully_covered: bool
    forward_lists: dict[int, tuple[int, ...]]


def initial_state(g: Graph, source: int) -> ProbState:
    """Initialization: everything outside the source's reach is uncovered,
    all probabilities start at zero, and the source itself is absorbed so
    it can never be selected as its own forward node."""
    g.check_node(source)
    prob = {u: 0.0 for u in g.nodes}
    prob[source] = INFINITY
    uncovered = set(g.nodes) - g.closed_neighbors(source)
    return ProbState(prob=prob, uncovered=uncovered)


def coverage_count(g: Graph, i: int, rel_source: int, uncovered) -> int:
    """Number of uncovered nodes that i would newly cover, relative to the
    source it would be forwarding for."""
    g.check_node(i)
    g.check_node(rel_source)
    return len((g.closed_neighbors(i) - g.closed_neighbors(rel_source)) & frozenset(uncovered))


def prob_value(n_i: int) -> float:
    """1/n_i, with zero mapping to INFINITY (covers nothing new)."""
    if n_i < 0:
        raise InputError(f"coverage count must be non-negative, got {n_i}")
    if n_i == 0:
        return INFINITY
    return 1.0 / n_i


def select_forward(g: Graph, acting_source: int, state: ProbState) -> int | None:
    """Pick the acting source's next forward node, or None when exhausted.

    Recomputes the value of every not-yet-absorbed neighbor from the
    current uncovered list (stale values are never trusted), stores the
    refreshed values, and returns the neighbor with the minimum finite
    probability, smallest id on ties.
    """
    g.check_node(acting_source)
    best: int | None = None
    best_count = 0
    for i in sorted(g.neighbors(acting_source)):
        if state.prob[i] == INFINITY:
            continue
        n_i = coverage_count(g, i, acting_source, state.uncovered)
        state.prob[i] = prob_value(n_i)
        if n_i > best_count:
            best, best_count = i, n_i
    return best


def apply_forward(g: Graph, f: int, rel_source: int, state: ProbState) -> frozenset[int]:
    """Account for f's transmission on behalf of rel_source.

    Records f's covered list, absorbs f's probability to INFINITY, and
    shrinks the uncovered list.  Returns the covered list.
    """
    covered = (g.closed_neighbors(f) - g.closed_neighbors(rel_source)) & frozenset(state.uncovered)
    state.covered_by[f] = covered
    state.prob[f] = INFINITY
    state.uncovered -= covered
    return covered


def run_prob_broadcast(g: Graph, source: int) -> ProbResult:
    """Execute a complete probability-based broadcast from source.

    The acting source selects forwards until none of its neighbors covers
    anything new, then delegates the role depth-first along its forward
    list (each delegate runs to completion, sub-delegations included,
    before the next sibling).  Each selection strictly shrinks the
    uncovered list, so the run always terminates.
    """
    state = initial_state(g, source)
    sequence = [source]

    def act(node: int) -> None:
        while state.uncovered:
            f = select_forward(g, node, state)
            if f is None:
                break
            apply_forward(g, f, node, state)
            state.forward_lists.setdefault(node, []).append(f)
            sequence.append(f)
        for child in state.forward_lists.get(node, ()):
            if not state.uncovered:
                break
            act(child)

    act(source)

    delivered = frozenset().union(*(g.closed_neighbors(t) for t in sequence))
    return ProbResult(
        forward_sequence=tuple(sequence),
        delivered=delivered,
        fully_covered=not state.uncovered,
        forward_lists={u: tuple(fs) for u, fs in state.forward_lists.items()},
    )
