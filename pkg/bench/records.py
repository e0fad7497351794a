"""
Output records: JSON lines for communities and stats, CSV tables via pandas.
"""
import json
from typing import Iterable, List, TextIO

import pandas as pd

from bench._constants import BENCH_COLUMNS, COMMUNITY_COLUMNS
from data import WeightedBipartiteGraph
from search import APPROX_ALGORITHMS, SearchStats, TopRSet


def community_records(topr: TopRSet) -> List[dict]:
    return [{"record": "community", **c.to_record(rank)} for rank, c in enumerate(topr, start=1)]


def stats_record(algo: str, graph: WeightedBipartiteGraph, stats: SearchStats) -> dict:
    return {
        "record": "stats",
        "algo": algo,
        "n_u": graph.upper_count,
        "n_v": graph.lower_count,
        "m": graph.edge_count,
        **stats.to_record(),
    }


def influences_text(topr: TopRSet) -> str:
    return ";".join(str(value) for value in topr.influences())


def bench_row(
    algo: str,
    alpha: int,
    beta: int,
    r: int,
    seed: int,
    graph: WeightedBipartiteGraph,
    topr: TopRSet,
    stats: SearchStats,
) -> dict:
    # greedy searches count expanded vertices where exact ones count nodes
    nodes = stats.vertices_expanded if algo in APPROX_ALGORITHMS else stats.nodes
    return {
        "algo": algo,
        "alpha": alpha,
        "beta": beta,
        "r": r,
        "seed": seed,
        "n_u": graph.upper_count,
        "n_v": graph.lower_count,
        "m": graph.edge_count,
        "time_ms": int(round(stats.wall_time * 1000)),
        "nodes": nodes,
        "cuts_ub1": stats.cuts["ub1"],
        "cuts_ub2": stats.cuts["ub2"],
        "cuts_ub3": stats.cuts["ub3"],
        "slim_skips": stats.slim_skips,
        "timed_out": stats.timed_out,
        "influences": influences_text(topr),
    }


def write_jsonl(records: Iterable[dict], stream: TextIO) -> None:
    for record in records:
        stream.write(json.dumps(record) + "\n")


def write_communities_csv(topr: TopRSet, stream: TextIO) -> None:
    rows = []
    for rank, community in enumerate(topr, start=1):
        record = community.to_record(rank)
        record["upper_ids"] = " ".join(str(u) for u in community.upper_ids)
        record["lower_ids"] = " ".join(str(v) for v in community.lower_ids)
        rows.append(record)
    pd.DataFrame(rows, columns=list(COMMUNITY_COLUMNS)).to_csv(stream, index=False, lineterminator="\n")


def write_bench(rows: List[dict], stream: TextIO, fmt: str = "csv") -> None:
    if fmt == "json":
        write_jsonl(rows, stream)
        return
    pd.DataFrame(rows, columns=list(BENCH_COLUMNS)).to_csv(stream, index=False, lineterminator="\n")


def write_stats_csv(record: dict, stream: TextIO) -> None:
    """One-row table, separated from a preceding table by a blank line."""
    stream.write("\n")
    pd.DataFrame([record]).to_csv(stream, index=False, lineterminator="\n")
