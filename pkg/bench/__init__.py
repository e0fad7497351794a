from bench._constants import (
    BENCH_COLUMNS,
    COMMUNITY_COLUMNS,
    DEFAULT_SEED,
    DEFAULT_W_MAX,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_TIMEOUT,
    EXIT_UNEXPECTED,
    EXIT_USAGE,
    EXIT_VALIDATION,
    ORACLE_ALGO,
    SWEEP_VARIABLES,
)
from bench.config import BenchSpec, BenchSpecError, RunConfig
from bench.records import bench_row, community_records, stats_record, write_bench, write_jsonl
from bench.harness import cmd_bench, cmd_gen, cmd_oracle, cmd_run, weights_path_for

__all__ = [
    "BENCH_COLUMNS",
    "COMMUNITY_COLUMNS",
    "DEFAULT_SEED",
    "DEFAULT_W_MAX",
    "EXIT_OK",
    "EXIT_UNEXPECTED",
    "EXIT_USAGE",
    "EXIT_PARSE",
    "EXIT_VALIDATION",
    "EXIT_TIMEOUT",
    "ORACLE_ALGO",
    "SWEEP_VARIABLES",
    "RunConfig",
    "BenchSpec",
    "BenchSpecError",
    "bench_row",
    "community_records",
    "stats_record",
    "write_bench",
    "write_jsonl",
    "cmd_run",
    "cmd_bench",
    "cmd_gen",
    "cmd_oracle",
    "weights_path_for",
]
