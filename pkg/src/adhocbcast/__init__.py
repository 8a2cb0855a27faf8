"""Broadcast forward-node selection for ad hoc wireless networks.

Compares blind flooding, two pruning algorithms driven by 2-hop
neighborhood set cover, and a probability-based selector, over random
geometric or user-supplied graphs, with an exact brute-force baseline
and a reproducible experiment harness.
"""

from .errors import GenerationError, InputError, ParseError, SizeError
from .exact import OracleResult, min_forward_set, min_set_cover
from .experiments import (
    ExperimentConfig,
    ResultRow,
    SummaryRow,
    auto_radius,
    format_summary,
    rows_to_csv,
    run_experiment,
    summarize,
)
from .graphs import (
    Graph,
    gen_connected_random_geometric,
    gen_random_geometric,
    parse_edge_list,
    serialize_edge_list,
)
from .probabilistic import (
    INFINITY,
    ProbResult,
    ProbState,
    apply_forward,
    coverage_count,
    initial_state,
    prob_value,
    run_prob_broadcast,
    select_forward,
)
from .pruning import (
    NO_SENDER,
    CoverProblem,
    ForwardSelection,
    candidate_set,
    dp_forward_list,
    dp_universe,
    greedy_cover,
    tdp_forward_list,
    tdp_universe,
)
from .simulation import (
    Algorithm,
    BroadcastTrace,
    Metrics,
    TransmissionEvent,
    delivered_by_forward_set,
    evaluate,
    run_algorithm,
    run_blind_flooding,
    run_pruned_broadcast,
    serialize_trace,
    trace_violations,
)
from .topologies import six_node_network, twelve_node_network

__version__ = "0.1.0"
