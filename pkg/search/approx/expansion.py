"""
Greedy breadth-first expansion of one connected core component.

Starting from the heaviest upper vertex, each popped vertex enqueues its
heaviest neighbours: at least the layer threshold of them, more when the top
weights tie. All ties break by smallest vertex id.
"""
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, List, Optional, Sequence, Set

from data import Community, Influence, SubgraphView, is_core
from search.base import SearchParams, SearchStats


def check_gamma(sorted_weights: Sequence[int], threshold: int) -> int:
    """
    Number of neighbours to take: the length of the leading run of weights equal
    to the first one when that run is longer than ``threshold``, else ``threshold``.
    """
    if not sorted_weights:
        return threshold
    first = sorted_weights[0]
    num = 0
    for w in sorted_weights:
        if w != first:
            break
        num += 1
    return num if num > threshold else threshold


@dataclass
class ExpansionState:
    queue: Deque[int] = field(default_factory=deque)
    visited: Set[int] = field(default_factory=set)
    upper: List[int] = field(default_factory=list)
    lower: List[int] = field(default_factory=list)
    upper_sum: int = 0
    lower_sum: int = 0
    gamma: int = 0

    def push(self, x: int) -> None:
        # marking on enqueue keeps every vertex in the queue at most once
        self.visited.add(x)
        self.queue.append(x)

    def add(self, x: int, is_upper: bool, weight: int) -> None:
        if is_upper:
            self.upper.append(x)
            self.upper_sum += weight
        else:
            self.lower.append(x)
            self.lower_sum += weight

    def influence(self) -> Influence:
        return Influence.from_sums(self.upper_sum, len(self.upper), self.lower_sum, len(self.lower))


def expand_component(
    component: SubgraphView,
    params: SearchParams,
    h_min: Influence,
    prune: bool,
    stats: Optional[SearchStats] = None,
) -> Optional[Community]:
    """
    Grow a candidate community inside ``component``.

    With ``prune`` the expansion stops as soon as both layers are present and the
    running influence drops below ``h_min``. Either way the grown vertex set is
    returned only if it is an (alpha, beta)-core whose influence beats ``h_min``.
    """
    graph = component.graph
    weights = graph.weights
    adjacency = graph.adjacency
    uppers = component.upper_vertices()
    if not uppers:
        return None
    state = ExpansionState()
    state.push(min(uppers, key=lambda x: (-weights[x], x)))

    while state.queue:
        v = state.queue.popleft()
        v_upper = graph.is_upper(v)
        state.add(v, v_upper, weights[v])
        if stats is not None:
            stats.vertices_expanded += 1
        if prune and state.upper and state.lower and state.influence() < h_min:
            if stats is not None:
                stats.early_breaks += 1
            break
        nbrs = sorted((y for y in adjacency[v] if y in component), key=lambda y: (-weights[y], y))
        state.gamma = check_gamma([weights[y] for y in nbrs], params.alpha if v_upper else params.beta)
        for y in nbrs[: state.gamma]:
            if y not in state.visited:
                state.push(y)

    grown = SubgraphView.induced(graph, state.upper + state.lower)
    if not is_core(grown, params.alpha, params.beta):
        return None
    candidate = Community.from_view(grown)
    return candidate if candidate.influence > h_min else None
