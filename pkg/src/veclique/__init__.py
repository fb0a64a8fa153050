"""Maximum clique search by verification and elimination."""

from .graph import Clique, EdgeDrops, Graph, GraphError, from_edges, is_clique_subset
from .solver import (
    Mode,
    SearchStats,
    SolveResult,
    SolverConfig,
    Status,
    find_maximum_clique,
    next_combination,
    select_clique_of_size,
)

__all__ = [
    "Clique",
    "EdgeDrops",
    "Graph",
    "GraphError",
    "Mode",
    "SearchStats",
    "SolveResult",
    "SolverConfig",
    "Status",
    "find_maximum_clique",
    "from_edges",
    "is_clique_subset",
    "next_combination",
    "select_clique_of_size",
]
