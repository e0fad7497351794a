"""
Slim-tree exact search.

Same recursion as :class:`BasicSearch`, but after deleting a candidate and
re-peeling, every vertex the peel removed is dropped from the rest of this
level's candidate list for that layer. Recursion continues on the re-peeled
core rather than on the bare deletion.
"""
from typing import Iterator

from data import SubgraphView, WeightedBipartiteGraph
from search.base import SearchParams, SearchResult
from search.exact.basic import BasicSearch


class SlimTreeSearch(BasicSearch):
    name = "slimtree"

    def _children(self, component: SubgraphView) -> Iterator[SubgraphView]:
        alpha, beta = self.params.alpha, self.params.beta
        for candidates in (component.upper_vertices(), component.lower_vertices()):
            remaining = set(candidates)
            for x in candidates:
                if x not in remaining:
                    continue
                remaining.discard(x)
                mark = component.checkpoint()
                component.remove_vertex(x)
                peeled = component.peel(alpha, beta)
                self.stats.core_computations += 1
                for y in peeled:
                    if y in remaining:
                        remaining.discard(y)
                        self.stats.slim_skips += 1
                if self._admit(component):
                    yield component
                component.rollback(mark)

    def _admit(self, core: SubgraphView) -> bool:
        return True


def slimtree_search(graph: WeightedBipartiteGraph, params: SearchParams) -> SearchResult:
    return SlimTreeSearch(graph, params).run()
