"""
Graph loading for the CLI and the bench harness.

Loaders return a ready :class:`~data.WeightedBipartiteGraph`; weight
regeneration by seed is applied on top of whatever the source provides.
"""
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Optional

from data import WeightedBipartiteGraph, generate_random_bipartite, generate_weights, load_graph


class BaseGraphLoader(ABC):
    """Abstract base class for graph loaders."""

    @abstractmethod
    def load_data(self, **kwargs) -> WeightedBipartiteGraph:
        pass


class KonectGraphLoader(BaseGraphLoader):
    """Reads a KONECT edge file and an optional weight file."""

    def __init__(self, edge_path: Path, weight_path: Optional[Path] = None):
        self.edge_path = Path(edge_path)
        self.weight_path = Path(weight_path) if weight_path is not None else None

    def load_data(self, **kwargs) -> WeightedBipartiteGraph:
        with self.edge_path.open(encoding="utf-8") as edges:
            if self.weight_path is None:
                return load_graph(edges)
            with self.weight_path.open(encoding="utf-8") as weights:
                return load_graph(edges, weights)


class SyntheticGraphLoader(BaseGraphLoader):
    """Uniform random bipartite graph with uniform weights, fixed by ``seed``."""

    def __init__(self, upper_count: int, lower_count: int, edge_count: int, seed: int, w_max: int):
        self.upper_count = upper_count
        self.lower_count = lower_count
        self.edge_count = edge_count
        self.seed = seed
        self.w_max = w_max

    def load_data(self, **kwargs) -> WeightedBipartiteGraph:
        return generate_random_bipartite(
            self.upper_count, self.lower_count, self.edge_count, self.seed, self.w_max
        )


def reweighted(graph: WeightedBipartiteGraph, seed: Optional[int], w_max: int) -> WeightedBipartiteGraph:
    """``graph`` with freshly drawn weights when ``seed`` is set, else unchanged."""
    if seed is None:
        return graph
    return generate_weights(graph, seed, w_max)
