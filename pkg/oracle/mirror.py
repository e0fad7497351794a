"""
Unipartite to bipartite mirror transform.

Each vertex ``v`` of a simple undirected graph becomes an upper mirror and a
lower mirror with the same id and weight; each edge ``{u, v}`` becomes the two
edges ``(upper u, lower v)`` and ``(upper v, lower u)``.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

import networkx as nx

from data import GraphValidationError, WeightedBipartiteGraph


@dataclass(frozen=True)
class UnipartiteGraph:
    """Simple undirected graph on vertices ``1..n`` with integer weights."""

    vertex_count: int
    edges: Tuple[Tuple[int, int], ...]
    weights: Tuple[int, ...]

    @classmethod
    def from_edges(
        cls, vertex_count: int, edges: Iterable[Tuple[int, int]], weights: Optional[Sequence[int]] = None
    ) -> "UnipartiteGraph":
        """
        Raises:
            GraphValidationError: on self-loops, ids outside ``1..n`` or negative weights.
        """
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphValidationError(f"self-loop on vertex {u} has no mirror image")
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise GraphValidationError(f"edge ({u}, {v}) outside 1..{vertex_count}")
            seen.add((min(u, v), max(u, v)))
        weights = tuple(weights) if weights is not None else (1,) * vertex_count
        if len(weights) != vertex_count:
            raise GraphValidationError(f"expected {vertex_count} weights, got {len(weights)}")
        if any(w < 0 for w in weights):
            raise GraphValidationError("weights must be nonnegative")
        return cls(vertex_count, tuple(sorted(seen)), weights)

    def to_networkx(self) -> nx.Graph:
        """Nodes are the 1-based ids, each carrying a ``weight`` attribute."""
        G = nx.Graph()
        G.add_nodes_from((v, {"weight": w}) for v, w in enumerate(self.weights, start=1))
        G.add_edges_from(self.edges)
        return G

    def degree(self, v: int) -> int:
        return self.to_networkx().degree(v)


def mirror_transform(graph: UnipartiteGraph) -> WeightedBipartiteGraph:
    edges = []
    for u, v in graph.edges:
        edges.append((u, v))
        edges.append((v, u))
    return WeightedBipartiteGraph.from_edges(
        graph.vertex_count, graph.vertex_count, edges, graph.weights, graph.weights
    )


def unipartite_k_core(graph: UnipartiteGraph, k: int) -> Tuple[FrozenSet[int], Optional[Fraction]]:
    """
    Maximal k-core and the average weight of its vertices (None when the core
    is empty).
    """
    core = nx.k_core(graph.to_networkx(), k=k)
    if core.number_of_nodes() == 0:
        return frozenset(), None
    weights = nx.get_node_attributes(core, "weight")
    return frozenset(core.nodes), Fraction(sum(weights.values()), len(weights))
