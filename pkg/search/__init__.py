from search._constants import (
    ALGORITHMS,
    APPROX_ALGORITHMS,
    BOUND_NAMES,
    DEFAULT_BOUNDS,
    DEFAULT_TIME_LIMIT,
    EXACT_ALGORITHMS,
)
from search.topr import TopRSet
from search.base import BaseSearch, SearchConfigError, SearchParams, SearchResult, SearchStats
from search.exact import (
    BasicSearch,
    DoubleGreedyState,
    SlimTreeSearch,
    UpperBoundSearch,
    basic_search,
    double_greedy_avg,
    slimtree_search,
    ub1,
    ub2,
    ub3,
    upperbound_search,
)
from search.approx import (
    NewFraSearch,
    PruningSearch,
    check_gamma,
    expand_component,
    newfra_search,
    pruning_search,
)

__all__ = [
    "ALGORITHMS",
    "EXACT_ALGORITHMS",
    "APPROX_ALGORITHMS",
    "BOUND_NAMES",
    "DEFAULT_BOUNDS",
    "DEFAULT_TIME_LIMIT",
    "TopRSet",
    "BaseSearch",
    "SearchConfigError",
    "SearchParams",
    "SearchResult",
    "SearchStats",
    "BasicSearch",
    "SlimTreeSearch",
    "UpperBoundSearch",
    "NewFraSearch",
    "PruningSearch",
    "basic_search",
    "slimtree_search",
    "upperbound_search",
    "newfra_search",
    "pruning_search",
    "ub1",
    "ub2",
    "ub3",
    "double_greedy_avg",
    "DoubleGreedyState",
    "check_gamma",
    "expand_component",
    "get_algorithm",
]

_REGISTRY = {
    cls.name: cls
    for cls in (BasicSearch, SlimTreeSearch, UpperBoundSearch, NewFraSearch, PruningSearch)
}


def get_algorithm(name: str) -> type:
    """
    Return the search class registered under ``name``.

    Names: 'basic', 'slimtree', 'upperbound' (exact) and 'newfra', 'pruning'
    (greedy).
    """
    try:
        return _REGISTRY[name]
    except KeyError:
        raise SearchConfigError(
            f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHMS)}"
        ) from None
