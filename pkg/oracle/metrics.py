"""
Quality reporting for the greedy searches, and the min-weight influence model
used for comparison with the average model.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import pandas as pd

from data import LOWER, UPPER, Community, WeightedBipartiteGraph
from search import TopRSet


@dataclass(frozen=True)
class RankRatio:
    rank: int
    approx: Optional[str]
    exact: str
    ratio: Optional[Fraction]


@dataclass(frozen=True)
class ApproximationReport:
    """
    Per-rank ratio f(approx_i) / f(exact_i) as exact rationals.

    A rank the approximate set does not reach has ``approx`` and ``ratio`` set to
    None and counts against ``coverage``. A zero exact influence also leaves the
    ratio undefined.
    """

    ranks: List[RankRatio]
    coverage: Fraction

    @property
    def top1(self) -> Optional[Fraction]:
        return self.ranks[0].ratio if self.ranks else None

    def decimals(self, digits: int = 6) -> List[Optional[float]]:
        return [None if r.ratio is None else round(float(r.ratio), digits) for r in self.ranks]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "rank": [r.rank for r in self.ranks],
                "approx": [r.approx for r in self.ranks],
                "exact": [r.exact for r in self.ranks],
                "ratio": [None if r.ratio is None else str(r.ratio) for r in self.ranks],
                "ratio_decimal": self.decimals(),
            },
            columns=["rank", "approx", "exact", "ratio", "ratio_decimal"],
        )


def approximation_ratio(approx: TopRSet, exact: TopRSet) -> ApproximationReport:
    ranks = []
    approx_entries = list(approx)
    for i, reference in enumerate(exact):
        found = approx_entries[i] if i < len(approx_entries) else None
        ratio = None
        if found is not None and reference.influence.numerator != 0:
            ratio = found.influence.to_fraction() / reference.influence.to_fraction()
        ranks.append(
            RankRatio(
                rank=i + 1,
                approx=None if found is None else str(found.influence),
                exact=str(reference.influence),
                ratio=ratio,
            )
        )
    if len(exact) == 0:
        coverage = Fraction(1)
    else:
        coverage = Fraction(min(len(approx), len(exact)), len(exact))
    return ApproximationReport(ranks, coverage)


def minimum_weight_influence(graph: WeightedBipartiteGraph, community: Community) -> int:
    """Smallest upper weight plus smallest lower weight of ``community``."""
    return min(graph.weights[graph.vertex(UPPER, u)] for u in community.upper_ids) + min(
        graph.weights[graph.vertex(LOWER, v)] for v in community.lower_ids
    )
