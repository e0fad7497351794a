"""
Shared constants for the search algorithms and their callers.
"""
from typing import Tuple

BOUND_NAMES: Tuple[str, ...] = ("ub1", "ub2", "ub3")

# ub3 can fall below the largest layer weight (e.g. upper weights
# 5,100,40,40,1,1,1,1 give 2*185/4 < 100), so it only joins when asked for.
DEFAULT_BOUNDS: Tuple[str, ...] = ("ub1", "ub2")

EXACT_ALGORITHMS: Tuple[str, ...] = ("basic", "slimtree", "upperbound")
APPROX_ALGORITHMS: Tuple[str, ...] = ("newfra", "pruning")
ALGORITHMS: Tuple[str, ...] = EXACT_ALGORITHMS + APPROX_ALGORITHMS

# One hour per run; longer runs are reported as timed out.
DEFAULT_TIME_LIMIT: float = 3600.0
