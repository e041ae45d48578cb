"""Exact computation of mutual-visibility sets and their independent variants."""

from .graphcore import (
    INF,
    Graph,
    GraphError,
    diameter,
    enumerate_connected_graphs,
    from_edge_list,
    load_graph,
    parse_graph6,
    to_graph6,
)
from .invariants import (
    DEFAULT_CAPS,
    CapExceeded,
    InvariantResult,
    SolverCaps,
    compute,
    independence_number,
    mu,
    mu_dual,
    mu_independent_variant,
    mu_outer,
    mu_total,
)
from .visibility import VARIANTS, VisibilityVerdict, check, x_visible

__version__ = "0.1.0"
