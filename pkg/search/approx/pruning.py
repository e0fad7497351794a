"""
Greedy search with early break: an expansion stops once its running influence
falls below the current r-th best.
"""
from data import WeightedBipartiteGraph
from search.approx.newfra import NewFraSearch
from search.base import SearchParams, SearchResult


class PruningSearch(NewFraSearch):
    name = "pruning"
    prune = True


def pruning_search(graph: WeightedBipartiteGraph, params: SearchParams) -> SearchResult:
    return PruningSearch(graph, params).run()
