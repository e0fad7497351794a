"""
Shared constants for the command-line harness.
"""
from typing import Tuple

DEFAULT_W_MAX: int = 100
DEFAULT_SEED: int = 0
DEFAULT_ALPHA: int = 2
DEFAULT_BETA: int = 2
DEFAULT_TOP: int = 10

ORACLE_ALGO: str = "oracle"
OUTPUT_FORMATS: Tuple[str, ...] = ("json", "csv")
SWEEP_VARIABLES: Tuple[str, ...] = ("alpha", "beta", "r", "sample-fraction")

BENCH_COLUMNS: Tuple[str, ...] = (
    "algo",
    "alpha",
    "beta",
    "r",
    "seed",
    "n_u",
    "n_v",
    "m",
    "time_ms",
    "nodes",
    "cuts_ub1",
    "cuts_ub2",
    "cuts_ub3",
    "slim_skips",
    "timed_out",
    "influences",
)
COMMUNITY_COLUMNS: Tuple[str, ...] = ("rank", "influence", "influence_decimal", "upper_ids", "lower_ids")

EXIT_OK: int = 0
EXIT_UNEXPECTED: int = 1
EXIT_USAGE: int = 2
EXIT_PARSE: int = 3
EXIT_VALIDATION: int = 4
EXIT_TIMEOUT: int = 5
