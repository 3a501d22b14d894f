"""Critical nodes (middlemen), contestability and brokerage power in directed networks."""

from ._middlemen import (
    Graph,
    __version__,
    betweenness,
    beta_measure,
    bonacich,
    brokerage,
    classify,
    classify_all,
    closeness,
    contests,
    directly_contests,
    distance_based_power,
    duality_audit,
    fixture_names,
    is_contested,
    middleman_power,
    middleman_set,
    minimal_contesting_sets,
    pagerank,
    pair_middleman_set,
    potential_brokerage,
    power_all,
    report,
    successor_set,
    predecessor_set,
)

__all__ = [
    "Graph",
    "__version__",
    "betweenness",
    "beta_measure",
    "bonacich",
    "brokerage",
    "classify",
    "classify_all",
    "closeness",
    "contests",
    "directly_contests",
    "distance_based_power",
    "duality_audit",
    "fixture_names",
    "is_contested",
    "middleman_power",
    "middleman_set",
    "minimal_contesting_sets",
    "pagerank",
    "pair_middleman_set",
    "potential_brokerage",
    "power_all",
    "report",
    "successor_set",
    "predecessor_set",
]
