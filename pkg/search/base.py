"""
Base search class, parameters and run statistics shared by all algorithms.
"""
import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, NamedTuple, Optional

from data import Influence, SubgraphView, WeightedBipartiteGraph
from search._constants import BOUND_NAMES, DEFAULT_BOUNDS
from search.topr import TopRSet

logger = logging.getLogger(__name__)


class SearchConfigError(ValueError):
    """Raised when search parameters are invalid."""


class SearchTimeout(Exception):
    """Raised inside a search when its wall-clock budget is spent."""


@dataclass(frozen=True)
class SearchParams:
    alpha: int
    beta: int
    r: int
    bounds: FrozenSet[str] = frozenset(DEFAULT_BOUNDS)
    time_limit: Optional[float] = None
    # Called with (view, min bound) for every bound evaluation; tests use it to
    # check that no community inside the view beats the bound.
    bound_audit: Optional[Callable[[SubgraphView, Influence], None]] = field(
        default=None, compare=False, repr=False
    )

    def validate(self) -> "SearchParams":
        for name in ("alpha", "beta", "r"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise SearchConfigError(f"{name} must be a positive integer, got {value!r}")
        unknown = set(self.bounds) - set(BOUND_NAMES)
        if unknown:
            raise SearchConfigError(f"unknown bounds {sorted(unknown)}; choose from {BOUND_NAMES}")
        if self.time_limit is not None and self.time_limit <= 0:
            raise SearchConfigError(f"time limit must be positive, got {self.time_limit}")
        return self


@dataclass
class SearchStats:
    nodes: int = 0
    core_computations: int = 0
    bound_evaluations: int = 0
    cuts: Dict[str, int] = field(default_factory=lambda: {name: 0 for name in BOUND_NAMES})
    slim_skips: int = 0
    vertices_expanded: int = 0
    early_breaks: int = 0
    wall_time: float = 0.0
    timed_out: bool = False

    def to_record(self) -> dict:
        """Deterministic counters only; wall time is left out."""
        return {
            "nodes": self.nodes,
            "core_computations": self.core_computations,
            "bound_evaluations": self.bound_evaluations,
            "cuts_ub1": self.cuts["ub1"],
            "cuts_ub2": self.cuts["ub2"],
            "cuts_ub3": self.cuts["ub3"],
            "slim_skips": self.slim_skips,
            "vertices_expanded": self.vertices_expanded,
            "early_breaks": self.early_breaks,
            "timed_out": self.timed_out,
        }


class SearchResult(NamedTuple):
    topr: TopRSet
    stats: SearchStats


class BaseSearch(ABC):
    """Abstract base class for the top-r searches."""

    name: str = ""

    def __init__(self, graph: WeightedBipartiteGraph, params: SearchParams):
        self.graph = graph
        self.params = params.validate()
        self.topr = TopRSet(params.r)
        self.stats = SearchStats()
        self._deadline: Optional[float] = None

    @abstractmethod
    def _search(self, root: SubgraphView) -> None:
        """Populate ``self.topr`` and ``self.stats`` from the whole graph."""

    def _check_deadline(self) -> None:
        if self._deadline is not None and time.monotonic() >= self._deadline:
            raise SearchTimeout()

    def run(self) -> SearchResult:
        p = self.params
        logger.info(
            "%s: alpha=%d beta=%d r=%d on n_u=%d n_v=%d",
            self.name, p.alpha, p.beta, p.r, self.graph.upper_count, self.graph.lower_count,
        )
        start = time.monotonic()
        if p.time_limit is not None:
            self._deadline = start + p.time_limit
        try:
            self._search(SubgraphView.full(self.graph))
        except SearchTimeout:
            self.stats.timed_out = True
            logger.warning("%s: time limit of %.3fs reached, returning partial results", self.name, p.time_limit)
        self.stats.wall_time = time.monotonic() - start
        logger.info(
            "%s: %d communities, %d nodes, %.3fs",
            self.name, len(self.topr), self.stats.nodes, self.stats.wall_time,
        )
        return SearchResult(self.topr, self.stats)
