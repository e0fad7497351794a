"""
Independent checks of a single community against the definition.

Connectivity and degrees are read off a networkx copy of the graph, so the
checks share no code with the peeling and component routines under test.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import networkx as nx

from data import LOWER, UPPER, Community, Influence, WeightedBipartiteGraph


def to_networkx(graph: WeightedBipartiteGraph) -> nx.Graph:
    """Nodes are ``(layer, id)`` labels with ``bipartite`` and ``weight`` attributes."""
    G = nx.Graph()
    G.add_nodes_from(((UPPER, u), {"bipartite": 0, "weight": w}) for u, w in enumerate(graph.upper_weights, 1))
    G.add_nodes_from(((LOWER, v), {"bipartite": 1, "weight": w}) for v, w in enumerate(graph.lower_weights, 1))
    G.add_edges_from(((UPPER, u), (LOWER, v)) for u, v in graph.edges())
    return G


@dataclass(frozen=True)
class CommunityDiagnostics:
    """
    Result of :func:`validate_community`.

    ``slack`` maps each ``(layer, id)`` to its degree inside the community minus
    its layer threshold; ``violations`` lists the vertices with negative slack.
    """

    connected: bool
    slack: Dict[Tuple[str, int], int]
    violations: Tuple[Tuple[str, int], ...]
    both_layers: bool
    recomputed: Optional[Influence]
    influence_matches: bool

    @property
    def cohesive(self) -> bool:
        return self.both_layers and not self.violations

    @property
    def ok(self) -> bool:
        return self.connected and self.cohesive and self.influence_matches

    def describe(self) -> List[str]:
        problems = []
        if not self.connected:
            problems.append("not connected")
        if not self.both_layers:
            problems.append("a layer is empty")
        for layer, vid in self.violations:
            problems.append(f"{layer}{vid} below its degree threshold ({self.slack[(layer, vid)]})")
        if not self.influence_matches:
            problems.append(f"stored influence differs from recomputed {self.recomputed}")
        return problems


def validate_community(
    graph: WeightedBipartiteGraph, candidate: Community, alpha: int, beta: int
) -> CommunityDiagnostics:
    """
    Check connectivity, degree thresholds and the stored influence of ``candidate``.

    Raises:
        GraphValidationError: if an id is not a vertex of ``graph``.
    """
    labels = [graph.label(x) for x in sorted(candidate.vertices(graph))]
    induced = to_networkx(graph).subgraph(labels)

    slack = {}
    for label in labels:
        threshold = alpha if label[0] == UPPER else beta
        slack[label] = induced.degree(label) - threshold
    violations = tuple(label for label, s in slack.items() if s < 0)

    both_layers = bool(candidate.upper_ids) and bool(candidate.lower_ids)
    recomputed = None
    if both_layers:
        recomputed = Community.from_ids(graph, candidate.upper_ids, candidate.lower_ids).influence
    return CommunityDiagnostics(
        # the null graph raises in nx.is_connected
        connected=bool(labels) and nx.is_connected(induced),
        slack=slack,
        violations=violations,
        both_layers=both_layers,
        recomputed=recomputed,
        influence_matches=recomputed is not None and recomputed == candidate.influence,
    )
