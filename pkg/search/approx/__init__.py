from search.approx.expansion import ExpansionState, check_gamma, expand_component
from search.approx.newfra import NewFraSearch, newfra_search
from search.approx.pruning import PruningSearch, pruning_search

__all__ = [
    "ExpansionState",
    "check_gamma",
    "expand_component",
    "NewFraSearch",
    "PruningSearch",
    "newfra_search",
    "pruning_search",
]
