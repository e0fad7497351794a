from search.exact.bounds import DoubleGreedyState, double_greedy_avg, ub1, ub2, ub3
from search.exact.basic import BasicSearch, basic_search
from search.exact.slimtree import SlimTreeSearch, slimtree_search
from search.exact.upperbound import UpperBoundSearch, upperbound_search

__all__ = [
    "ub1",
    "ub2",
    "ub3",
    "double_greedy_avg",
    "DoubleGreedyState",
    "BasicSearch",
    "SlimTreeSearch",
    "UpperBoundSearch",
    "basic_search",
    "slimtree_search",
    "upperbound_search",
]
