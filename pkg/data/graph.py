"""
Immutable vertex-weighted bipartite graph.

Vertices are addressed two ways:

- externally by ``(layer, id)`` with 1-based per-layer ids, exactly as they
  appear in KONECT edge files and in emitted communities;
- internally by a single global index ``x``: upper id ``i`` maps to ``i - 1``
  and lower id ``j`` maps to ``n_u + j - 1``. Ascending global index therefore
  means "upper layer first, then lower layer, ascending id", which is the
  iteration order every search relies on.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np

UPPER = "U"
LOWER = "V"


class GraphValidationError(ValueError):
    """Raised when graph data violates an invariant (ids, weights, sizes)."""


def _check_weights(weights: Sequence[int], layer: str) -> Tuple[int, ...]:
    out = []
    for pos, w in enumerate(weights, start=1):
        if isinstance(w, (bool, float)) or not isinstance(w, (int, np.integer)):
            raise GraphValidationError(
                f"weight of {layer}{pos} must be an integer, got {w!r}"
            )
        if w < 0:
            raise GraphValidationError(f"weight of {layer}{pos} is negative ({w})")
        out.append(int(w))
    return tuple(out)


@dataclass(frozen=True)
class WeightedBipartiteGraph:
    """
    Two-layer graph with nonnegative integer vertex weights.

    Build instances with :meth:`from_edges`; the constructor trusts its
    arguments. ``adjacency[x]`` holds the ascending global indices of the
    neighbours of global vertex ``x``.
    """

    upper_count: int
    lower_count: int
    adjacency: Tuple[Tuple[int, ...], ...]
    weights: Tuple[int, ...]

    @classmethod
    def from_edges(
        cls,
        upper_count: int,
        lower_count: int,
        edges: Iterable[Tuple[int, int]],
        upper_weights: Optional[Sequence[int]] = None,
        lower_weights: Optional[Sequence[int]] = None,
    ) -> "WeightedBipartiteGraph":
        """
        Build a graph from 1-based ``(upper id, lower id)`` pairs.

        Duplicate edges collapse. Missing weight sequences default to all 1.

        Raises:
            GraphValidationError: on ids outside ``1..n`` or invalid weights.
        """
        if upper_count < 0 or lower_count < 0:
            raise GraphValidationError("layer sizes must be nonnegative")
        uw = _check_weights(upper_weights if upper_weights is not None else [1] * upper_count, UPPER)
        lw = _check_weights(lower_weights if lower_weights is not None else [1] * lower_count, LOWER)
        if len(uw) != upper_count or len(lw) != lower_count:
            raise GraphValidationError(
                f"expected {upper_count} upper and {lower_count} lower weights, "
                f"got {len(uw)} and {len(lw)}"
            )

        pairs = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if pairs.size == 0:
            pairs = pairs.reshape(0, 2)
        if pairs.ndim != 2 or pairs.shape[1] != 2:
            raise GraphValidationError("edges must be (upper id, lower id) pairs")
        us, vs = pairs[:, 0] - 1, pairs[:, 1] - 1
        if len(pairs) and (us.min() < 0 or vs.min() < 0):
            raise GraphValidationError("vertex ids are 1-based; found an id below 1")
        if len(pairs) and (us.max() >= upper_count or vs.max() >= lower_count):
            raise GraphValidationError(
                f"edge endpoint outside layer sizes ({upper_count}, {lower_count})"
            )

        n = upper_count + lower_count
        adjacency: list = [()] * n
        if len(pairs):
            codes = np.unique(us * lower_count + vs)
            us, vs = np.divmod(codes, lower_count)
            # codes are sorted by (u, v): split the lower ends per upper vertex
            upper_deg = np.bincount(us, minlength=upper_count)
            for x, block in enumerate(np.split(vs + upper_count, np.cumsum(upper_deg)[:-1])):
                adjacency[x] = tuple(block.tolist())
            order = np.lexsort((us, vs))
            lower_deg = np.bincount(vs, minlength=lower_count)
            for j, block in enumerate(np.split(us[order], np.cumsum(lower_deg)[:-1])):
                adjacency[upper_count + j] = tuple(block.tolist())

        return cls(upper_count, lower_count, tuple(adjacency), uw + lw)

    # ------------------------------------------------------------------
    # Sizes and addressing
    # ------------------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self.upper_count + self.lower_count

    @property
    def edge_count(self) -> int:
        return sum(len(self.adjacency[x]) for x in range(self.upper_count))

    @property
    def upper_weights(self) -> Tuple[int, ...]:
        return self.weights[: self.upper_count]

    @property
    def lower_weights(self) -> Tuple[int, ...]:
        return self.weights[self.upper_count:]

    def is_upper(self, x: int) -> bool:
        return x < self.upper_count

    def vertex(self, layer: str, vid: int) -> int:
        """Global index of the 1-based ``vid`` in ``layer``."""
        size = self.upper_count if layer == UPPER else self.lower_count
        if not 1 <= vid <= size:
            raise GraphValidationError(f"{layer}{vid} is not a vertex of this graph")
        return vid - 1 if layer == UPPER else self.upper_count + vid - 1

    def label(self, x: int) -> Tuple[str, int]:
        """``(layer, 1-based id)`` of global vertex ``x``."""
        if x < self.upper_count:
            return UPPER, x + 1
        return LOWER, x - self.upper_count + 1

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    def edges(self) -> Iterator[Tuple[int, int]]:
        """1-based ``(upper id, lower id)`` pairs, sorted."""
        for x in range(self.upper_count):
            for y in self.adjacency[x]:
                yield x + 1, y - self.upper_count + 1

    # ------------------------------------------------------------------
    # Derived graphs
    # ------------------------------------------------------------------

    def with_weights(
        self, upper_weights: Sequence[int], lower_weights: Sequence[int]
    ) -> "WeightedBipartiteGraph":
        uw = _check_weights(upper_weights, UPPER)
        lw = _check_weights(lower_weights, LOWER)
        if len(uw) != self.upper_count or len(lw) != self.lower_count:
            raise GraphValidationError("weight vector length does not match layer size")
        return WeightedBipartiteGraph(self.upper_count, self.lower_count, self.adjacency, uw + lw)

    def transposed(self) -> "WeightedBipartiteGraph":
        """Swap the layers: upper becomes lower and vice versa."""
        return WeightedBipartiteGraph.from_edges(
            self.lower_count,
            self.upper_count,
            [(v, u) for u, v in self.edges()],
            self.lower_weights,
            self.upper_weights,
        )

    def induced(
        self, upper_ids: Sequence[int], lower_ids: Sequence[int]
    ) -> "WeightedBipartiteGraph":
        """
        Induced subgraph on the given 1-based ids, relabelled to ``1..k`` in
        ascending original-id order.
        """
        up = sorted(set(upper_ids))
        lo = sorted(set(lower_ids))
        up_map = {vid: i for i, vid in enumerate(up, start=1)}
        lo_map = {vid: j for j, vid in enumerate(lo, start=1)}
        edges = [
            (up_map[u], lo_map[v])
            for u, v in self.edges()
            if u in up_map and v in lo_map
        ]
        return WeightedBipartiteGraph.from_edges(
            len(up),
            len(lo),
            edges,
            [self.weights[u - 1] for u in up],
            [self.weights[self.upper_count + v - 1] for v in lo],
        )
