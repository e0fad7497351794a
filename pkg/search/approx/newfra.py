"""
Greedy single-pass search: one expansion per component of the maximal core.
"""
from data import SubgraphView, WeightedBipartiteGraph, alpha_beta_core, connected_components
from search.approx.expansion import expand_component
from search.base import BaseSearch, SearchParams, SearchResult


class NewFraSearch(BaseSearch):
    name = "newfra"
    prune = False

    def _search(self, root: SubgraphView) -> None:
        core = alpha_beta_core(root, self.params.alpha, self.params.beta)
        self.stats.core_computations += 1
        for component in connected_components(core):
            self._check_deadline()
            self.stats.nodes += 1
            candidate = expand_component(
                component, self.params, self.topr.h_min, self.prune, self.stats
            )
            if candidate is not None:
                self.topr.insert(candidate)


def newfra_search(graph: WeightedBipartiteGraph, params: SearchParams) -> SearchResult:
    return NewFraSearch(graph, params).run()
