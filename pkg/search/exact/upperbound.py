"""
Upper-bound exact search: the slim tree plus a bound gate on every child.

A child core is searched unless the minimum of the enabled bounds falls
strictly below the top-r floor, the r-th largest distinct influence found so
far. A bound that ties the floor still lets the child through: an
equal-influence superset of a kept community may lie inside it.
"""
import logging

from data import SubgraphView, WeightedBipartiteGraph
from search.base import SearchConfigError, SearchParams, SearchResult
from search.exact.bounds import bound_functions, tightest_bound
from search.exact.slimtree import SlimTreeSearch

logger = logging.getLogger(__name__)


class UpperBoundSearch(SlimTreeSearch):
    name = "upperbound"

    def __init__(self, graph: WeightedBipartiteGraph, params: SearchParams):
        super().__init__(graph, params)
        if not params.bounds:
            raise SearchConfigError("the upper-bound search needs at least one bound enabled")
        self._bounds = bound_functions(params)

    def _admit(self, core: SubgraphView) -> bool:
        if core.is_empty():
            return False
        name, ub = tightest_bound(core, self._bounds)
        self.stats.bound_evaluations += 1
        if self.params.bound_audit is not None:
            self.params.bound_audit(core, ub)
        floor = self.topr.floor
        if ub >= floor:
            return True
        self.stats.cuts[name] += 1
        logger.debug("cut by %s=%s at floor=%s", name, ub, floor)
        return False


def upperbound_search(graph: WeightedBipartiteGraph, params: SearchParams) -> SearchResult:
    return UpperBoundSearch(graph, params).run()
