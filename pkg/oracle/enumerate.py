"""
Brute-force ground truth for small graphs.

Every vertex subset is tried as a bitmask; a subset is kept when its induced
subgraph has both layers, meets the degree thresholds and is connected. Kept
subsets that sit strictly inside another kept subset of equal influence are
then discarded.
"""
import json
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, TextIO

from data import Community, SubgraphView, WeightedBipartiteGraph
from oracle.validate import validate_community
from search import TopRSet

logger = logging.getLogger(__name__)

ORACLE_MAX_VERTICES = 22


class OracleRefusalError(ValueError):
    """Raised when a graph is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class CandidateDiagnostics:
    connected: bool
    cohesive: bool
    maximal: bool

    def to_record(self) -> dict:
        return {"connected": self.connected, "cohesive": self.cohesive, "maximal": self.maximal}


@dataclass
class EnumerationReport:
    """All influential communities of one instance, in ranking order."""

    communities: List[Community]
    diagnostics: List[CandidateDiagnostics]
    metadata: Dict[str, object] = field(default_factory=dict)
    topr: Optional[TopRSet] = None

    def __len__(self) -> int:
        return len(self.communities)

    def top(self, r: int) -> TopRSet:
        return TopRSet.from_ranked(r, self.communities)

    def to_records(self) -> List[dict]:
        records = [{"record": "metadata", **self.metadata}]
        for rank, (community, diag) in enumerate(zip(self.communities, self.diagnostics), start=1):
            records.append(
                {"record": "community", **community.to_record(rank), "diagnostics": diag.to_record()}
            )
        return records

    def write_jsonl(self, stream: TextIO) -> None:
        for record in self.to_records():
            stream.write(json.dumps(record) + "\n")


def ranking_key(community: Community):
    """Influence descending, then size descending, then ids ascending."""
    return (
        -community.influence.to_fraction(),
        -community.size,
        community.upper_ids,
        community.lower_ids,
    )


def _check_guard(graph: WeightedBipartiteGraph) -> None:
    if graph.vertex_count > ORACLE_MAX_VERTICES:
        logger.warning(
            "oracle refused: %d vertices over the limit of %d",
            graph.vertex_count, ORACLE_MAX_VERTICES,
        )
        raise OracleRefusalError(
            f"brute force is limited to {ORACLE_MAX_VERTICES} vertices, graph has {graph.vertex_count}"
        )


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _meets_degrees(sub: int, nbr_masks: List[int], split: int, alpha: int, beta: int) -> bool:
    for x in _bits(sub):
        if bin(nbr_masks[x] & sub).count("1") < (alpha if x < split else beta):
            return False
    return True


def _connected(sub: int, nbr_masks: List[int]) -> bool:
    reached = frontier = sub & -sub
    while frontier:
        grown = 0
        for x in _bits(frontier):
            grown |= nbr_masks[x]
        frontier = grown & sub & ~reached
        reached |= frontier
    return reached == sub


def _core_subsets(graph: WeightedBipartiteGraph, alpha: int, beta: int, within: int) -> List[int]:
    """Bitmasks of the connected cores whose vertices all lie in ``within``."""
    split = graph.upper_count
    upper_mask = (1 << split) - 1
    nbr_masks = [sum(1 << y for y in nbrs) for nbrs in graph.adjacency]
    kept = []
    sub = within
    while sub:
        if (
            sub & upper_mask
            and sub & ~upper_mask
            and _meets_degrees(sub, nbr_masks, split, alpha, beta)
            and _connected(sub, nbr_masks)
        ):
            kept.append(sub)
        sub = (sub - 1) & within
    return kept


def _to_community(graph: WeightedBipartiteGraph, mask: int) -> Community:
    upper, lower = [], []
    for x in _bits(mask):
        (upper if graph.is_upper(x) else lower).append(graph.label(x)[1])
    return Community.from_ids(graph, upper, lower)


def _maximal(graph: WeightedBipartiteGraph, masks: List[int]) -> List[Community]:
    by_value = defaultdict(list)
    for mask in masks:
        community = _to_community(graph, mask)
        by_value[community.influence].append((mask, community))
    survivors = []
    for group in by_value.values():
        for mask, community in group:
            if not any(other != mask and other & mask == mask for other, _ in group):
                survivors.append(community)
    return sorted(survivors, key=ranking_key)


def enumerate_influential_communities(
    graph: WeightedBipartiteGraph,
    alpha: int,
    beta: int,
    r: Optional[int] = None,
    seed: Optional[int] = None,
) -> EnumerationReport:
    """
    All (alpha, beta)-influential communities of ``graph`` in ranking order.

    Each community is re-checked with :func:`validate_community` for the
    diagnostics block. With ``r`` the report also carries the top-r extract.

    Raises:
        OracleRefusalError: if the graph has more than ``ORACLE_MAX_VERTICES`` vertices.
    """
    _check_guard(graph)
    communities = _maximal(graph, _core_subsets(graph, alpha, beta, (1 << graph.vertex_count) - 1))
    diagnostics = []
    for community in communities:
        check = validate_community(graph, community, alpha, beta)
        diagnostics.append(CandidateDiagnostics(check.connected, check.cohesive, True))
    metadata = {
        "seed": seed,
        "n_u": graph.upper_count,
        "n_v": graph.lower_count,
        "m": graph.edge_count,
        "alpha": alpha,
        "beta": beta,
        "r": r,
        "count": len(communities),
    }
    report = EnumerationReport(communities, diagnostics, metadata)
    if r is not None:
        report.topr = report.top(r)
    logger.debug("oracle: %d influential communities", len(communities))
    return report


def enumerate_view(view: SubgraphView, alpha: int, beta: int) -> List[Community]:
    """Influential communities of the subgraph induced by the view's active vertices."""
    _check_guard(view.graph)
    within = 0
    for x in view.vertices():
        within |= 1 << x
    return _maximal(view.graph, _core_subsets(view.graph, alpha, beta, within))


def brute_force_topr(graph: WeightedBipartiteGraph, alpha: int, beta: int, r: int) -> TopRSet:
    """First ``r`` communities of the enumeration order."""
    return enumerate_influential_communities(graph, alpha, beta).top(r)
