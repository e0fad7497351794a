"""
Mutable induced-subgraph overlay used by every search.

A view stores, for each active vertex, its live degree (number of active
neighbours). Per-layer sizes and weight sums are maintained on every removal;
per-layer maxima are cached and recomputed lazily once the current maximum
leaves the view. Removals are logged, so ``rollback`` restores an earlier state
exactly; the exact searches rely on that to hand a child recursion the
induced subgraph and get the parent back afterwards.
"""
from collections import deque
from typing import Dict, Iterable, List, Optional

from data.graph import WeightedBipartiteGraph


class ViewUsageError(RuntimeError):
    """Raised when a view operation is applied to a vertex or log state it does not own."""


class SubgraphView:
    __slots__ = (
        "graph",
        "degrees",
        "upper_size",
        "lower_size",
        "upper_sum",
        "lower_sum",
        "_upper_max",
        "_lower_max",
        "_log",
    )

    def __init__(self, graph: WeightedBipartiteGraph, degrees: Dict[int, int]):
        self.graph = graph
        self.degrees = degrees
        weights = graph.weights
        split = graph.upper_count
        self.upper_size = self.lower_size = 0
        self.upper_sum = self.lower_sum = 0
        for x in degrees:
            if x < split:
                self.upper_size += 1
                self.upper_sum += weights[x]
            else:
                self.lower_size += 1
                self.lower_sum += weights[x]
        self._upper_max: Optional[int] = None
        self._lower_max: Optional[int] = None
        self._log: List[int] = []

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def full(cls, graph: WeightedBipartiteGraph) -> "SubgraphView":
        return cls(graph, {x: len(nbrs) for x, nbrs in enumerate(graph.adjacency)})

    @classmethod
    def induced(cls, graph: WeightedBipartiteGraph, vertices: Iterable[int]) -> "SubgraphView":
        members = set(vertices)
        adjacency = graph.adjacency
        degrees = {
            x: sum(1 for y in adjacency[x] if y in members) for x in sorted(members)
        }
        return cls(graph, degrees)

    def copy(self) -> "SubgraphView":
        """Independent copy with an empty removal log."""
        clone = SubgraphView.__new__(SubgraphView)
        clone.graph = self.graph
        clone.degrees = dict(self.degrees)
        clone.upper_size, clone.lower_size = self.upper_size, self.lower_size
        clone.upper_sum, clone.lower_sum = self.upper_sum, self.lower_sum
        clone._upper_max, clone._lower_max = self._upper_max, self._lower_max
        clone._log = []
        return clone

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.degrees)

    def __contains__(self, x: int) -> bool:
        return x in self.degrees

    def is_empty(self) -> bool:
        return not self.degrees

    def vertices(self) -> List[int]:
        """Active global indices ascending (upper layer first)."""
        return sorted(self.degrees)

    def upper_vertices(self) -> List[int]:
        split = self.graph.upper_count
        return sorted(x for x in self.degrees if x < split)

    def lower_vertices(self) -> List[int]:
        split = self.graph.upper_count
        return sorted(x for x in self.degrees if x >= split)

    def live_degree(self, x: int) -> int:
        return self.degrees[x]

    @property
    def upper_max(self) -> Optional[int]:
        """Maximum upper weight in the view, None when the layer is empty."""
        if self._upper_max is None and self.upper_size:
            weights = self.graph.weights
            self._upper_max = max(weights[x] for x in self.upper_vertices())
        return self._upper_max

    @property
    def lower_max(self) -> Optional[int]:
        if self._lower_max is None and self.lower_size:
            weights = self.graph.weights
            self._lower_max = max(weights[x] for x in self.lower_vertices())
        return self._lower_max

    # ------------------------------------------------------------------
    # Mutation with undo
    # ------------------------------------------------------------------

    def remove_vertex(self, x: int) -> "SubgraphView":
        degrees = self.degrees
        if x not in degrees:
            raise ViewUsageError(f"vertex {self.graph.label(x)} is not active in this view")
        for y in self.graph.adjacency[x]:
            if y in degrees:
                degrees[y] -= 1
        del degrees[x]
        w = self.graph.weights[x]
        if x < self.graph.upper_count:
            self.upper_size -= 1
            self.upper_sum -= w
            if self._upper_max == w:
                self._upper_max = None
        else:
            self.lower_size -= 1
            self.lower_sum -= w
            if self._lower_max == w:
                self._lower_max = None
        self._log.append(x)
        return self

    def _restore(self, x: int) -> None:
        degrees = self.degrees
        live = 0
        for y in self.graph.adjacency[x]:
            if y in degrees:
                degrees[y] += 1
                live += 1
        degrees[x] = live
        w = self.graph.weights[x]
        if x < self.graph.upper_count:
            self.upper_size += 1
            self.upper_sum += w
            if self._upper_max is not None and w > self._upper_max:
                self._upper_max = w
        else:
            self.lower_size += 1
            self.lower_sum += w
            if self._lower_max is not None and w > self._lower_max:
                self._lower_max = w

    def checkpoint(self) -> int:
        return len(self._log)

    def rollback(self, mark: int) -> None:
        """Undo every removal made since ``checkpoint()`` returned ``mark``."""
        if mark > len(self._log) or mark < 0:
            raise ViewUsageError(f"checkpoint {mark} is not in this view's log")
        while len(self._log) > mark:
            self._restore(self._log.pop())

    def restore_last(self) -> int:
        """Undo the most recent removal and return the restored vertex."""
        if not self._log:
            raise ViewUsageError("nothing to restore")
        x = self._log.pop()
        self._restore(x)
        return x

    # ------------------------------------------------------------------
    # Peeling
    # ------------------------------------------------------------------

    def peel(self, alpha: int, beta: int) -> List[int]:
        """
        Remove vertices below their layer threshold until a fixpoint is reached.

        Returns the removed vertices in removal order. Runs in O(m) over the view.
        """
        degrees = self.degrees
        split = self.graph.upper_count
        adjacency = self.graph.adjacency

        def short(x: int) -> bool:
            return degrees[x] < (alpha if x < split else beta)

        queue = deque(x for x in sorted(degrees) if short(x))
        queued = set(queue)
        removed: List[int] = []
        while queue:
            x = queue.popleft()
            self.remove_vertex(x)
            removed.append(x)
            for y in adjacency[x]:
                if y in degrees and y not in queued and short(y):
                    queued.add(y)
                    queue.append(y)
        return removed

    def recomputed(self) -> "SubgraphView":
        """Fresh view over the same active set, every cache computed from scratch."""
        return SubgraphView.induced(self.graph, self.degrees)

    def __repr__(self) -> str:
        return (
            f"SubgraphView(upper={self.upper_size}, lower={self.lower_size}, "
            f"vertices={[self.graph.label(x) for x in self.vertices()]})"
        )


def alpha_beta_core(view: SubgraphView, alpha: int, beta: int) -> SubgraphView:
    """Maximal (alpha, beta)-core of ``view`` as a new view; ``view`` is untouched."""
    if alpha < 1 or beta < 1:
        raise ValueError(f"alpha and beta must be >= 1, got ({alpha}, {beta})")
    core = view.copy()
    core.peel(alpha, beta)
    return core


def connected_components(view: SubgraphView) -> List[SubgraphView]:
    """
    Components of ``view`` over active edges, each as its own view, ordered by
    smallest contained global index.
    """
    adjacency = view.graph.adjacency
    active = view.degrees
    seen = set()
    components = []
    for start in sorted(active):
        if start in seen:
            continue
        seen.add(start)
        members = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adjacency[x]:
                if y in active and y not in seen:
                    seen.add(y)
                    members.append(y)
                    queue.append(y)
        # live degrees inside a component equal the view's live degrees
        components.append(SubgraphView(view.graph, {x: active[x] for x in sorted(members)}))
    return components


def is_core(view: SubgraphView, alpha: int, beta: int) -> bool:
    """True iff the view is nonempty and every active vertex meets its layer threshold."""
    if view.is_empty():
        return False
    split = view.graph.upper_count
    return all(d >= (alpha if x < split else beta) for x, d in view.degrees.items())
