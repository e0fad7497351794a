"""
Upper bounds on the influence of any (alpha, beta)-community inside a view.

- ub1: the largest upper weight plus the largest lower weight.
- ub2: sum_U / beta + sum_V / alpha (a community has at least beta upper and
  alpha lower vertices; needs nonnegative weights).
- ub3: twice the double-greedy estimate of the best subset average, per layer.

All values are exact :class:`~data.Influence` rationals.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Tuple

from data import Influence, SubgraphView, UndefinedInfluenceError
from search.base import SearchParams


def _require_both_layers(view: SubgraphView) -> None:
    if not view.upper_size or not view.lower_size:
        raise UndefinedInfluenceError(
            f"bound undefined with layer sizes ({view.upper_size}, {view.lower_size})"
        )


def ub1(view: SubgraphView) -> Influence:
    _require_both_layers(view)
    return Influence(view.upper_max + view.lower_max)


def ub2(view: SubgraphView, params: SearchParams) -> Influence:
    _require_both_layers(view)
    return Influence.from_fraction(
        Fraction(view.upper_sum, params.beta) + Fraction(view.lower_sum, params.alpha)
    )


def _avg(total: int, count: int) -> Fraction:
    # the empty average is 0 here and nowhere else
    return Fraction(total, count) if count else Fraction(0)


@dataclass
class GreedyStep:
    weight: int
    a: Fraction
    b: Fraction
    accepted: bool

    @property
    def a_clamped(self) -> Fraction:
        return max(self.a, Fraction(0))

    @property
    def b_clamped(self) -> Fraction:
        return max(self.b, Fraction(0))


@dataclass
class DoubleGreedyState:
    """
    Running state of the single-pass accept/reject procedure.

    X holds accepted weights, Y starts as the full multiset and loses rejected
    weights; only sums and counts are kept.
    """

    x_sum: int = 0
    x_count: int = 0
    y_sum: int = 0
    y_count: int = 0
    steps: List[GreedyStep] = field(default_factory=list)

    @classmethod
    def start(cls, weights: Iterable[int]) -> "DoubleGreedyState":
        weights = list(weights)
        return cls(y_sum=sum(weights), y_count=len(weights))

    def step(self, w: int) -> bool:
        x_avg = _avg(self.x_sum, self.x_count)
        y_avg = _avg(self.y_sum, self.y_count)
        a = _avg(self.x_sum + w, self.x_count + 1) - x_avg
        b = _avg(self.y_sum - w, self.y_count - 1) - y_avg
        accepted = max(a, 0) >= max(b, 0)
        if accepted:
            self.x_sum += w
            self.x_count += 1
        else:
            self.y_sum -= w
            self.y_count -= 1
        self.steps.append(GreedyStep(w, a, b, accepted))
        return accepted

    @property
    def average(self) -> Fraction:
        return _avg(self.x_sum, self.x_count)


def double_greedy_avg(weights: Iterable[int]) -> Fraction:
    """Double-greedy estimate of the maximum subset average, in input order."""
    weights = list(weights)
    state = DoubleGreedyState.start(weights)
    for w in weights:
        state.step(w)
    return state.average


def ub3(view: SubgraphView) -> Influence:
    _require_both_layers(view)
    weights = view.graph.weights
    upper = double_greedy_avg(weights[x] for x in view.upper_vertices())
    lower = double_greedy_avg(weights[x] for x in view.lower_vertices())
    return Influence.from_fraction(2 * upper + 2 * lower)


def bound_functions(params: SearchParams) -> Dict[str, Callable[[SubgraphView], Influence]]:
    """Enabled bounds in canonical order (ub1, ub2, ub3)."""
    available = {
        "ub1": ub1,
        "ub2": lambda view: ub2(view, params),
        "ub3": ub3,
    }
    return {name: fn for name, fn in available.items() if name in params.bounds}


def tightest_bound(
    view: SubgraphView, bounds: Dict[str, Callable[[SubgraphView], Influence]]
) -> Tuple[str, Influence]:
    """Name and value of the smallest bound; ties go to the earlier name."""
    best_name, best = None, None
    for name, fn in bounds.items():
        value = fn(view)
        if best is None or value < best:
            best_name, best = name, value
    return best_name, best
