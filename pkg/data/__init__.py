from data.graph import LOWER, UPPER, GraphValidationError, WeightedBipartiteGraph
from data.influence import (
    MINUS_INFINITY,
    Community,
    Influence,
    UndefinedInfluenceError,
    compare_influence,
    influence,
)
from data.view import SubgraphView, ViewUsageError, alpha_beta_core, connected_components, is_core
from data.konect import GraphParseError, load_graph, write_edges, write_weights
from data.generators import generate_random_bipartite, generate_weights, sample_vertices

__all__ = [
    "UPPER",
    "LOWER",
    "WeightedBipartiteGraph",
    "GraphValidationError",
    "SubgraphView",
    "ViewUsageError",
    "alpha_beta_core",
    "connected_components",
    "is_core",
    "Influence",
    "MINUS_INFINITY",
    "Community",
    "UndefinedInfluenceError",
    "compare_influence",
    "influence",
    "GraphParseError",
    "load_graph",
    "write_edges",
    "write_weights",
    "generate_weights",
    "generate_random_bipartite",
    "sample_vertices",
]
