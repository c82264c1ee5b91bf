"""Weak closedness of graphs and F-purity of binomial edge ideals."""
from .classify import (
    bigclaw,
    claw,
    closed_condition_holds,
    is_chordal,
    is_closed,
    is_complete_multipartite,
    is_perfect,
    is_weakly_closed,
    wc_condition_holds,
)
from .graph import (
    Graph,
    Labeling,
    canonical_code,
    complement,
    cycle_graph,
    graph_from_edges,
    parse_graph6,
    relabel,
    to_graph6,
)
from .interchange import (
    adjacentability_certificate,
    is_adjacentable,
    is_weakly_closed_by_definition,
    theorem19_certificate,
)

__version__ = "0.1.0"
