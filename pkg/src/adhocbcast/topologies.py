"""Small hand-built networks with fully known broadcast behavior.

Both graphs are drawn with 1-based labels and stored 0-based (label
minus one).  Tests lean on them heavily because every selection step of
the probability-based broadcast can be traced by hand.
"""

from __future__ import annotations

from .graphs import Graph

__all__ = ["six_node_network", "twelve_node_network"]


def six_node_network() -> Graph:
    """Six nodes: 1 connects 2, 3 and 4; 5 hangs off 2 and 3; 6 off 3 and 4.

    From source 1, neighbor 3 newly covers both 5 and 6 while 2 and 4
    cover one each, so 3 is the unique best forward node.
    """
    labeled = [(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (3, 6), (4, 6)]
    return Graph(6, [(u - 1, v - 1) for u, v in labeled])


def twelve_node_network() -> Graph:
    """Twelve nodes: hub 6 connects 2, 5, 7 and 9; 7 connects 4, 8 and 11;
    2 connects 1 and 3; 9 connects 10; 8 and 11 both connect 12; 5
    connects 4.

    From source 6 the probability-based broadcast selects 7, 2, 9, then
    delegates to 7 which selects 8, covering all twelve nodes with
    transmitter list [6, 7, 2, 9, 8] (1-based labels).
    """
    labeled = [
        (6, 2), (6, 5), (6, 7), (6, 9),
        (7, 4), (7, 8), (7, 11),
        (2, 1), (2, 3),
        (9, 10),
        (8, 12), (11, 12),
        (5, 4),
    ]
    return Graph(12, [(u - 1, v - 1) for u, v in labeled])
