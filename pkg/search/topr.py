"""
Capacity-r ranked container of communities with the maximality filter.
"""
from typing import Iterable, Iterator, List

from data import MINUS_INFINITY, Community, Influence


class TopRSet:
    """
    Communities ordered by influence, descending; among equal influence the
    first one inserted ranks first.

    An offered community is rejected when it is an equal-influence subset of a
    kept one, and once accepted it drops every kept equal-influence subset of
    itself. Communities pushed out of the top r are kept in a reserve pool
    while they could still rank, so a later community that absorbs several
    kept subsets at once leaves the set refilled rather than short.

    Two thresholds are exposed. ``h_min`` is the influence of the reported
    r-th entry. ``floor`` is the r-th largest *distinct* influence in the
    pool; equal-influence entries may later collapse into one superset, so
    only distinct values are guaranteed to belong to distinct maximal
    communities, and ``floor`` is the value a search may safely prune against.
    """

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError(f"capacity must be >= 1, got {capacity}")
        self.capacity = capacity
        self._pool: List[Community] = []
        self._ranked: List[Community] = []
        self._floor: Influence = MINUS_INFINITY

    @classmethod
    def from_ranked(cls, capacity: int, ranked: Iterable[Community]) -> "TopRSet":
        """Take the first ``capacity`` communities of an already ranked sequence."""
        topr = cls(capacity)
        for community in ranked:
            if len(topr._pool) == capacity:
                break
            topr._pool.append(community)
        topr._refresh()
        return topr

    def __len__(self) -> int:
        return len(self._ranked)

    def __iter__(self) -> Iterator[Community]:
        return iter(self._ranked)

    @property
    def entries(self) -> List[Community]:
        return list(self._ranked)

    @property
    def h_min(self) -> Influence:
        """Influence of the r-th entry, minus infinity while fewer than r are held."""
        if len(self._ranked) < self.capacity:
            return MINUS_INFINITY
        return self._ranked[-1].influence

    @property
    def floor(self) -> Influence:
        return self._floor

    def influences(self) -> List[Influence]:
        return [c.influence for c in self._ranked]

    def insert(self, h: Community) -> bool:
        """Offer ``h``; return True if it now ranks within the top r."""
        if h.influence < self._floor:
            return False
        same = [kept for kept in self._pool if kept.influence == h.influence]
        if any(h.issubset(kept) for kept in same):
            return False
        for kept in same:
            if kept.issubset(h):
                self._pool.remove(kept)
        self._pool.append(h)
        self._refresh()
        return any(entry is h for entry in self._ranked)

    def _refresh(self) -> None:
        distinct = sorted({c.influence for c in self._pool}, reverse=True)
        self._floor = distinct[self.capacity - 1] if len(distinct) >= self.capacity else MINUS_INFINITY
        # below the floor a community can neither rank nor absorb a ranked one
        self._pool = [c for c in self._pool if c.influence >= self._floor]
        # sorted() is stable, so equal influences keep insertion order
        self._ranked = sorted(self._pool, key=lambda c: c.influence, reverse=True)[: self.capacity]

    def __repr__(self) -> str:
        return f"TopRSet(r={self.capacity}, influences={[str(v) for v in self.influences()]})"
