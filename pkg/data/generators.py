"""
Seeded synthetic data: uniform vertex weights, uniform random bipartite
graphs and uniform vertex sampling.

Every function draws from ``numpy.random.default_rng(seed)`` (PCG64), so the
same seed always reproduces the same output.
"""
import numpy as np

from data.graph import GraphValidationError, WeightedBipartiteGraph


def generate_weights(graph: WeightedBipartiteGraph, seed: int, w_max: int) -> WeightedBipartiteGraph:
    """Redraw every vertex weight uniformly from ``[1, w_max]`` (upper layer drawn first)."""
    if w_max < 1:
        raise GraphValidationError(f"w_max must be >= 1, got {w_max}")
    rng = np.random.default_rng(seed)
    drawn = rng.integers(1, w_max, endpoint=True, size=graph.vertex_count).tolist()
    return graph.with_weights(drawn[: graph.upper_count], drawn[graph.upper_count:])


def generate_random_bipartite(
    upper_count: int,
    lower_count: int,
    edge_count: int,
    seed: int,
    w_max: int,
) -> WeightedBipartiteGraph:
    """``edge_count`` distinct edges chosen uniformly, weights as :func:`generate_weights`."""
    if upper_count < 0 or lower_count < 0 or edge_count < 0:
        raise GraphValidationError("sizes must be nonnegative")
    if edge_count > upper_count * lower_count:
        raise GraphValidationError(
            f"m={edge_count} exceeds n_u*n_v={upper_count * lower_count}"
        )
    if w_max < 1:
        raise GraphValidationError(f"w_max must be >= 1, got {w_max}")
    rng = np.random.default_rng(seed)
    if edge_count:
        codes = rng.choice(upper_count * lower_count, size=edge_count, replace=False)
        us, vs = np.divmod(codes, lower_count)
        edges = np.column_stack((us + 1, vs + 1))
    else:
        edges = np.empty((0, 2), dtype=np.int64)
    graph = WeightedBipartiteGraph.from_edges(upper_count, lower_count, edges)
    return generate_weights(graph, seed, w_max)


def sample_vertices(graph: WeightedBipartiteGraph, fraction: float, seed: int) -> WeightedBipartiteGraph:
    """
    Keep ``round(fraction * n)`` vertices chosen uniformly and return the induced
    subgraph. The kept set is a prefix of one seeded permutation, so for a fixed
    seed larger fractions keep supersets of smaller ones.
    """
    if not 0 < fraction <= 1:
        raise GraphValidationError(f"sample fraction must be in (0, 1], got {fraction}")
    rng = np.random.default_rng(seed)
    keep = rng.permutation(graph.vertex_count)[: round(fraction * graph.vertex_count)]
    upper_ids, lower_ids = [], []
    for x in keep.tolist():
        layer_is_upper = graph.is_upper(x)
        (upper_ids if layer_is_upper else lower_ids).append(graph.label(x)[1])
    return graph.induced(upper_ids, lower_ids)
