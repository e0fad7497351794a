"""
The four commands behind the CLI. Each writes its records to ``stream`` and
returns an exit code; exceptions are left to the caller to map.
"""
import logging
from pathlib import Path
from typing import Callable, Optional, TextIO, Tuple

from bench._constants import EXIT_OK, EXIT_TIMEOUT, ORACLE_ALGO
from bench.config import BenchSpec, BenchSpecError, RunConfig
from bench.records import (
    bench_row,
    community_records,
    stats_record,
    write_bench,
    write_communities_csv,
    write_jsonl,
    write_stats_csv,
)
from data import WeightedBipartiteGraph, sample_vertices, write_edges, write_weights
from data_loader import KonectGraphLoader, SyntheticGraphLoader, reweighted
from oracle import approximation_ratio, brute_force_topr, enumerate_influential_communities
from search import SearchConfigError, SearchResult, SearchStats, TopRSet, get_algorithm

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[float, str], None]


def load_input(config: RunConfig) -> WeightedBipartiteGraph:
    if config.input is None:
        raise SearchConfigError(f"'{config.command}' needs --input")
    graph = KonectGraphLoader(config.input, config.weights).load_data()
    return reweighted(graph, config.gen_weights_seed, config.w_max)


def search(graph: WeightedBipartiteGraph, config: RunConfig, **overrides) -> SearchResult:
    params = config.search_params(**overrides)
    return get_algorithm(config.algo)(graph, params).run()


def _run_oracle(graph: WeightedBipartiteGraph, config: RunConfig) -> Tuple[TopRSet, SearchStats]:
    return brute_force_topr(graph, config.alpha, config.beta, config.top), SearchStats()


def cmd_run(config: RunConfig, stream: TextIO) -> int:
    """Search one graph and emit its communities plus a stats record."""
    config.validate()
    graph = load_input(config)
    if config.algo == ORACLE_ALGO:
        topr, stats = _run_oracle(graph, config)
    else:
        topr, stats = search(graph, config)
    logger.info("%s finished in %.3fs", config.algo, stats.wall_time)

    stats_row = stats_record(config.algo, graph, stats)
    if config.format == "csv":
        write_communities_csv(topr, stream)
        write_stats_csv(stats_row, stream)
    else:
        write_jsonl(community_records(topr) + [stats_row], stream)
    return EXIT_TIMEOUT if stats.timed_out else EXIT_OK


def cmd_oracle(config: RunConfig, stream: TextIO) -> int:
    """
    Emit the full enumeration report. With a search algorithm selected, also
    emit its per-rank ratios against the brute-force top-r.
    """
    config.validate()
    graph = load_input(config)
    report = enumerate_influential_communities(
        graph, config.alpha, config.beta, r=config.top, seed=config.gen_weights_seed
    )
    report.write_jsonl(stream)
    if config.algo == ORACLE_ALGO:
        return EXIT_OK

    result = search(graph, config)
    ratios = approximation_ratio(result.topr, report.topr)
    records = []
    for entry, decimal in zip(ratios.ranks, ratios.decimals()):
        records.append(
            {
                "record": "ratio",
                "algo": config.algo,
                "rank": entry.rank,
                "approx": entry.approx,
                "exact": entry.exact,
                "ratio": None if entry.ratio is None else str(entry.ratio),
                "ratio_decimal": decimal,
            }
        )
    records.append({"record": "coverage", "algo": config.algo, "coverage": str(ratios.coverage)})
    write_jsonl(records, stream)
    return EXIT_TIMEOUT if result.stats.timed_out else EXIT_OK


def cmd_bench(
    config: RunConfig,
    spec: BenchSpec,
    stream: TextIO,
    progress_callback: Optional[ProgressCallback] = None,
) -> int:
    """
    Run the selected algorithm once per sweep value and repetition and write
    one row per run. Repetition ``k`` uses seed ``spec.seed + k`` for vertex
    sampling and, when weights are regenerated, ``gen_weights_seed + k``.
    """
    spec.validate()
    config.validate()
    if config.algo == ORACLE_ALGO:
        raise BenchSpecError("the oracle is not a benchmark target; use the 'oracle' command")
    if config.input is None:
        raise SearchConfigError("'bench' needs --input")
    base = KonectGraphLoader(config.input, config.weights).load_data()

    total = len(spec.values) * spec.reps
    rows = []
    for done, (value, rep) in enumerate(spec.runs(), start=1):
        seed = spec.seed + rep
        graph = base
        overrides = {}
        if spec.vary == "sample-fraction":
            graph = sample_vertices(graph, value, seed)
        else:
            overrides[spec.vary] = value
        if config.gen_weights_seed is not None:
            graph = reweighted(graph, config.gen_weights_seed + rep, config.w_max)
        params = config.search_params(**overrides)
        result = get_algorithm(config.algo)(graph, params).run()
        rows.append(
            bench_row(config.algo, params.alpha, params.beta, params.r, seed, graph, result.topr, result.stats)
        )
        if progress_callback:
            progress_callback(done / total, f"{config.algo} {spec.vary}={value} rep {rep}")

    write_bench(rows, stream, config.format)
    return EXIT_TIMEOUT if any(row["timed_out"] for row in rows) else EXIT_OK


def weights_path_for(edge_path: Path) -> Path:
    return edge_path.with_name(edge_path.name + ".weights")


def cmd_gen(config: RunConfig) -> Tuple[Path, Path]:
    """Write a seeded random graph as an edge file and a weight file."""
    if config.nu is None or config.nv is None or config.m is None or config.output is None:
        raise SearchConfigError("'gen' needs --nu, --nv, --m and --output")
    graph = SyntheticGraphLoader(config.nu, config.nv, config.m, config.seed, config.w_max).load_data()
    graph = reweighted(graph, config.gen_weights_seed, config.w_max)
    edge_path = Path(config.output)
    weight_path = Path(config.weights) if config.weights else weights_path_for(edge_path)
    with edge_path.open("w", encoding="utf-8", newline="\n") as stream:
        write_edges(graph, stream)
    with weight_path.open("w", encoding="utf-8", newline="\n") as stream:
        write_weights(graph, stream)
    logger.info(
        "wrote n_u=%d n_v=%d m=%d to %s and %s",
        graph.upper_count, graph.lower_count, graph.edge_count, edge_path, weight_path,
    )
    return edge_path, weight_path
