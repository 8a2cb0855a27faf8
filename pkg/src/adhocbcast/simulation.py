"""Event-ordered broadcast simulation under an ideal MAC layer.

A broadcast is a sequence of transmission events; each transmission is
heard by the transmitter's whole open neighborhood, and a node relays at
most once.  The rule shared by every algorithm here: a node transmits
iff it is designated in the first event in which it receives the packet
(under blind flooding every first-time receiver is designated).  With no
collisions or losses the outcome is purely combinatorial, so event
ordering is fixed deterministically: breadth-first layers for flooding,
FIFO designation order with id tie-breaks for the pruned broadcasts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .errors import InputError
from .graphs import Graph
from .probabilistic import run_prob_broadcast
from .pruning import NO_SENDER, dp_forward_list, tdp_forward_list

__all__ = [
    "Algorithm",
    "TransmissionEvent",
    "BroadcastTrace",
    "Metrics",
    "run_blind_flooding",
    "run_pruned_broadcast",
    "run_algorithm",
    "evaluate",
    "serialize_trace",
    "trace_violations",
    "delivered_by_forward_set",
]


class Algorithm(str, Enum):
    FLOOD = "flood"
    DP = "dp"
    TDP = "tdp"
    PROB = "prob"


@dataclass(frozen=True)
class TransmissionEvent:
    """One transmission: who sent, whom they designated, who heard it."""

    transmitter: int
    designated_forwards: tuple[int, ...]
    receivers: frozenset[int]


@dataclass(frozen=True)
class BroadcastTrace:
    """Complete record of one broadcast: the source transmits first, no
    node transmits twice, and every later transmitter heard an earlier
    transmission."""

    source: int
    algorithm: Algorithm
    events: tuple[TransmissionEvent, ...]


@dataclass(frozen=True)
class Metrics:
    """Cost and delivery figures for one broadcast run.

    forward_count excludes the source; transmission_count includes it.
    coverage_ratio is delivered nodes over nodes reachable from the
    source.  redundant_receptions counts packet copies heard by nodes
    that already had the packet.
    """

    forward_count: int
    transmission_count: int
    delivered: frozenset[int]
    coverage_ratio: float
    redundant_receptions: int


def _first_reception_events(
    g: Graph, source: int, allowed: frozenset[int] | None
) -> list[TransmissionEvent]:
    """Layered broadcast where first-time receivers in `allowed` relay.

    allowed=None means everyone relays (blind flooding); then the layers
    are exactly the BFS distance layers, processed in ascending id order
    within each layer.
    """
    received = {source}
    current = [source]
    events: list[TransmissionEvent] = []
    while current:
        next_layer: list[int] = []
        for tx in current:
            rx = g.neighbors(tx)
            newly = rx - received
            designated = sorted(newly if allowed is None else newly & allowed)
            received |= rx
            events.append(TransmissionEvent(tx, tuple(designated), rx))
            next_layer.extend(designated)
        current = sorted(next_layer)
    return events


def run_blind_flooding(g: Graph, source: int) -> BroadcastTrace:
    """Every reachable node relays exactly once, breadth-first by
    (hop distance, node id)."""
    g.check_node(source)
    events = _first_reception_events(g, source, allowed=None)
    return BroadcastTrace(source, Algorithm.FLOOD, tuple(events))


def delivered_by_forward_set(g: Graph, source: int, forward_nodes) -> frozenset[int]:
    """Nodes reached when exactly source plus the given forward set relay.

    A forward node only transmits once the packet has actually reached it
    through earlier transmitters.  Used as the feasibility check for
    candidate forward sets; shares the event machinery above so there is
    no drift between checker and simulator.
    """
    g.check_node(source)
    allowed = frozenset(forward_nodes)
    for f in allowed:
        g.check_node(f)
    events = _first_reception_events(g, source, allowed=allowed)
    return frozenset({source}).union(*(ev.receivers for ev in events))


def run_pruned_broadcast(g: Graph, source: int, variant: Algorithm) -> BroadcastTrace:
    """Broadcast where each relay computes its forward list w.r.t. the
    sender it first heard the packet from.

    The source's list is computed with no sender.  A node relays iff it
    is designated in its first-reception event; later designations of an
    already-covered node are recorded in the trace but have no effect.
    Pending relays transmit in FIFO designation order, ties by node id.
    """
    g.check_node(source)
    if variant is Algorithm.DP:
        forward_fn = dp_forward_list
    elif variant is Algorithm.TDP:
        forward_fn = tdp_forward_list
    else:
        raise InputError(f"variant must be DP or TDP, got {variant!r}")

    received = {source}
    queue: deque[tuple[int, int | None]] = deque([(source, NO_SENDER)])
    events: list[TransmissionEvent] = []
    while queue:
        tx, sender = queue.popleft()
        selection = forward_fn(g, sender, tx)
        rx = g.neighbors(tx)
        activated = sorted(f for f in selection.nodes if f not in received)
        received |= rx
        events.append(TransmissionEvent(tx, selection.nodes, rx))
        for f in activated:
            queue.append((f, tx))
    return BroadcastTrace(source, variant, tuple(events))


def run_algorithm(g: Graph, source: int, algorithm: Algorithm) -> BroadcastTrace:
    """Uniform dispatch over all four broadcast algorithms."""
    algorithm = Algorithm(algorithm)
    if algorithm is Algorithm.FLOOD:
        return run_blind_flooding(g, source)
    if algorithm in (Algorithm.DP, Algorithm.TDP):
        return run_pruned_broadcast(g, source, algorithm)
    result = run_prob_broadcast(g, source)
    events = tuple(
        TransmissionEvent(t, result.forward_lists.get(t, ()), g.neighbors(t))
        for t in result.forward_sequence
    )
    return BroadcastTrace(source, Algorithm.PROB, events)


def evaluate(trace: BroadcastTrace, g: Graph) -> Metrics:
    """Compute Metrics for a trace, checking it actually belongs to g."""
    if not trace.events:
        raise InputError("trace has no events")
    for ev in trace.events:
        g.check_node(ev.transmitter)
        if ev.receivers != g.neighbors(ev.transmitter):
            raise InputError(
                f"trace does not match graph: receivers of node {ev.transmitter} differ"
            )
        if not set(ev.designated_forwards) <= ev.receivers:
            raise InputError(
                f"trace invalid: node {ev.transmitter} designated a non-receiver"
            )
    delivered = frozenset({trace.source}).union(*(ev.receivers for ev in trace.events))
    reachable = g.reachable_from(trace.source)
    receptions = sum(len(ev.receivers) for ev in trace.events)
    return Metrics(
        forward_count=len(trace.events) - 1,
        transmission_count=len(trace.events),
        delivered=delivered,
        coverage_ratio=len(delivered) / len(reachable),
        redundant_receptions=receptions - (len(delivered) - 1),
    )


def serialize_trace(trace: BroadcastTrace) -> str:
    """Line-oriented trace text, one event per line, ids ascending in lists."""
    lines = []
    for ev in trace.events:
        fwd = ",".join(str(i) for i in sorted(ev.designated_forwards))
        rx = ",".join(str(i) for i in sorted(ev.receivers))
        lines.append(f"tx={ev.transmitter} fwd=[{fwd}] rx=[{rx}]")
    return "\n".join(lines) + "\n"


def trace_violations(trace: BroadcastTrace, g: Graph) -> list[str]:
    """Structural problems with a trace; empty list means it is valid."""
    problems: list[str] = []
    if not trace.events:
        return ["trace has no events"]
    if trace.events[0].transmitter != trace.source:
        problems.append(
            f"first transmitter {trace.events[0].transmitter} is not the source {trace.source}"
        )
    seen_tx: set[int] = set()
    heard: set[int] = {trace.source}
    for idx, ev in enumerate(trace.events):
        if ev.transmitter in seen_tx:
            problems.append(f"node {ev.transmitter} transmits twice")
        if ev.transmitter not in heard:
            problems.append(
                f"node {ev.transmitter} transmits without having received (event {idx})"
            )
        if not set(ev.designated_forwards) <= ev.receivers:
            problems.append(f"event {idx} designates a non-receiver")
        if ev.receivers != g.neighbors(ev.transmitter):
            problems.append(f"event {idx} receivers do not match the graph")
        seen_tx.add(ev.transmitter)
        heard |= ev.receivers
    return problems
