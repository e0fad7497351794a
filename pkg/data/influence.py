"""
Exact influence arithmetic.

f(S) = sum_U(w)/n_u + sum_V(w)/n_v is held as the single reduced rational
(sum_U * n_v + sum_V * n_u) / (n_u * n_v). Ordering is by integer
cross-multiplication; Python integers are unbounded, so no intermediate can
overflow. Floats only appear in :meth:`Influence.as_decimal` for display.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import TYPE_CHECKING, Sequence, Tuple

from data.graph import LOWER, UPPER, WeightedBipartiteGraph

if TYPE_CHECKING:
    from data.view import SubgraphView


class UndefinedInfluenceError(ValueError):
    """Raised when influence is requested for a vertex set with an empty layer."""


@total_ordering
@dataclass(frozen=True)
class Influence:
    """Exact influence value, or the minus-infinity sentinel when ``finite`` is False."""

    numerator: int
    denominator: int = 1
    finite: bool = True

    def __post_init__(self):
        if not self.finite:
            return
        if self.denominator <= 0:
            raise ValueError(f"denominator must be positive, got {self.denominator}")
        g = gcd(self.numerator, self.denominator)
        if g > 1:
            object.__setattr__(self, "numerator", self.numerator // g)
            object.__setattr__(self, "denominator", self.denominator // g)

    @classmethod
    def from_sums(cls, upper_sum: int, upper_size: int, lower_sum: int, lower_size: int) -> "Influence":
        if upper_size <= 0 or lower_size <= 0:
            raise UndefinedInfluenceError(
                f"influence undefined with layer sizes ({upper_size}, {lower_size})"
            )
        return cls(upper_sum * lower_size + lower_sum * upper_size, upper_size * lower_size)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Influence":
        return cls(value.numerator, value.denominator)

    def to_fraction(self) -> Fraction:
        if not self.finite:
            raise ValueError("minus infinity has no rational value")
        return Fraction(self.numerator, self.denominator)

    def as_decimal(self) -> float:
        return float("-inf") if not self.finite else self.numerator / self.denominator

    def __eq__(self, other):
        if not isinstance(other, Influence):
            return NotImplemented
        return compare_influence(self, other) == 0

    def __lt__(self, other):
        if not isinstance(other, Influence):
            return NotImplemented
        return compare_influence(self, other) < 0

    def __hash__(self):
        return hash((self.numerator, self.denominator, self.finite))

    def __str__(self) -> str:
        if not self.finite:
            return "-inf"
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


MINUS_INFINITY = Influence(0, 1, finite=False)


def compare_influence(a: Influence, b: Influence) -> int:
    """Three-way comparison: -1 if a < b, 0 if equal, 1 if a > b."""
    if not a.finite or not b.finite:
        return (a.finite > b.finite) - (a.finite < b.finite)
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    return (lhs > rhs) - (lhs < rhs)


def influence(view: "SubgraphView") -> Influence:
    """Influence of the vertices active in ``view``."""
    return Influence.from_sums(view.upper_sum, view.upper_size, view.lower_sum, view.lower_size)


def _is_sorted_subset(small: Sequence[int], big: Sequence[int]) -> bool:
    # linear merge over two ascending lists
    j = 0
    for x in small:
        while j < len(big) and big[j] < x:
            j += 1
        if j == len(big) or big[j] != x:
            return False
        j += 1
    return True


@dataclass(frozen=True)
class Community:
    """Two sorted 1-based id tuples and the influence of the induced subgraph."""

    upper_ids: Tuple[int, ...]
    lower_ids: Tuple[int, ...]
    influence: Influence

    @classmethod
    def from_view(cls, view: "SubgraphView") -> "Community":
        graph = view.graph
        upper, lower = [], []
        for x in view.vertices():
            layer, vid = graph.label(x)
            (upper if layer == UPPER else lower).append(vid)
        return cls(tuple(upper), tuple(lower), influence(view))

    @classmethod
    def from_ids(
        cls,
        graph: WeightedBipartiteGraph,
        upper_ids: Sequence[int],
        lower_ids: Sequence[int],
    ) -> "Community":
        up = tuple(sorted(set(upper_ids)))
        lo = tuple(sorted(set(lower_ids)))
        up_sum = sum(graph.weights[graph.vertex(UPPER, u)] for u in up)
        lo_sum = sum(graph.weights[graph.vertex(LOWER, v)] for v in lo)
        return cls(up, lo, Influence.from_sums(up_sum, len(up), lo_sum, len(lo)))

    @property
    def size(self) -> int:
        return len(self.upper_ids) + len(self.lower_ids)

    def vertices(self, graph: WeightedBipartiteGraph) -> list:
        """Global indices of the community's vertices, ascending."""
        return [graph.vertex(UPPER, u) for u in self.upper_ids] + [
            graph.vertex(LOWER, v) for v in self.lower_ids
        ]

    def issubset(self, other: "Community") -> bool:
        return _is_sorted_subset(self.upper_ids, other.upper_ids) and _is_sorted_subset(
            self.lower_ids, other.lower_ids
        )

    def to_record(self, rank: int) -> dict:
        return {
            "rank": rank,
            "influence": str(self.influence),
            "influence_decimal": round(self.influence.as_decimal(), 6),
            "upper_ids": list(self.upper_ids),
            "lower_ids": list(self.lower_ids),
        }
