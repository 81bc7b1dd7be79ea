"""Total monochromatic connection number: exact solver, bounds and experiments."""

from ._core import (
    Graph,
    TmcError,
    classify,
    connectivity_limit,
    connectivity_probability,
    construct_theorem1,
    enumerate_connected_graphs,
    leaf_lower_bound,
    parse_graph6,
    sample_gnp,
    spanning_stats,
    sweep,
    threshold_p,
    tmc_exact,
    tmc_lower_bound,
    tmc_oracle,
    tmc_upper_bound,
    verify_tmc,
)

__all__ = [
    "Graph",
    "TmcError",
    "classify",
    "connectivity_limit",
    "connectivity_probability",
    "construct_theorem1",
    "enumerate_connected_graphs",
    "leaf_lower_bound",
    "parse_graph6",
    "sample_gnp",
    "spanning_stats",
    "sweep",
    "threshold_p",
    "tmc_exact",
    "tmc_lower_bound",
    "tmc_oracle",
    "tmc_upper_bound",
    "verify_tmc",
]
