"""
Basic exact search: peel, split into components, offer each component, then
recurse on the component minus each of its vertices in turn.

The recursion runs on an explicit stack of generators so that deep deletion
chains do not hit Python's recursion limit. Each generator is one call of the
recursive procedure; it yields the views its children should search, and it
is resumed only after the child's whole subtree is done, exactly like a
recursive call returning.
"""
from typing import Iterator

from data import Community, SubgraphView, WeightedBipartiteGraph, alpha_beta_core, connected_components
from search.base import BaseSearch, SearchParams, SearchResult


class BasicSearch(BaseSearch):
    name = "basic"

    def _search(self, root: SubgraphView) -> None:
        stack = [self._enter(root)]
        while stack:
            try:
                child = next(stack[-1])
            except StopIteration:
                stack.pop()
                continue
            stack.append(self._enter(child))

    def _enter(self, view: SubgraphView) -> Iterator[SubgraphView]:
        self._check_deadline()
        self.stats.nodes += 1
        return self._find(view)

    def _find(self, view: SubgraphView) -> Iterator[SubgraphView]:
        core = alpha_beta_core(view, self.params.alpha, self.params.beta)
        self.stats.core_computations += 1
        for component in connected_components(core):
            self.topr.insert(Community.from_view(component))
            yield from self._children(component)

    def _children(self, component: SubgraphView) -> Iterator[SubgraphView]:
        # upper layer first, each ascending by id
        for x in component.vertices():
            mark = component.checkpoint()
            component.remove_vertex(x)
            yield component
            component.rollback(mark)


def basic_search(graph: WeightedBipartiteGraph, params: SearchParams) -> SearchResult:
    return BasicSearch(graph, params).run()
