"""
Run and sweep configuration, built from CLI flags.
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional, Tuple, Union

from bench._constants import (
    DEFAULT_ALPHA,
    DEFAULT_BETA,
    DEFAULT_SEED,
    DEFAULT_TOP,
    DEFAULT_W_MAX,
    ORACLE_ALGO,
    OUTPUT_FORMATS,
    SWEEP_VARIABLES,
)
from search import ALGORITHMS, DEFAULT_BOUNDS, DEFAULT_TIME_LIMIT, SearchConfigError, SearchParams

SweepValue = Union[int, float]


class BenchSpecError(ValueError):
    """Raised when a sweep specification is invalid; no run has started yet."""


@dataclass(frozen=True)
class RunConfig:
    command: str = "run"
    input: Optional[Path] = None
    weights: Optional[Path] = None
    gen_weights_seed: Optional[int] = None
    w_max: int = DEFAULT_W_MAX
    algo: str = "upperbound"
    alpha: int = DEFAULT_ALPHA
    beta: int = DEFAULT_BETA
    top: int = DEFAULT_TOP
    bounds: Tuple[str, ...] = DEFAULT_BOUNDS
    time_limit: Optional[float] = DEFAULT_TIME_LIMIT
    format: str = "json"
    output: Optional[Path] = None
    seed: int = DEFAULT_SEED
    nu: Optional[int] = None
    nv: Optional[int] = None
    m: Optional[int] = None

    def validate(self) -> "RunConfig":
        """
        Raises:
            SearchConfigError: on an unknown algorithm, bound or output format,
                or a non-positive alpha, beta, top or time limit.
        """
        if self.algo not in ALGORITHMS + (ORACLE_ALGO,):
            raise SearchConfigError(
                f"unknown algorithm {self.algo!r}; choose from {', '.join(ALGORITHMS + (ORACLE_ALGO,))}"
            )
        if self.format not in OUTPUT_FORMATS:
            raise SearchConfigError(f"unknown format {self.format!r}")
        if self.algo != ORACLE_ALGO:
            self.search_params().validate()
        elif min(self.alpha, self.beta, self.top) < 1:
            raise SearchConfigError("alpha, beta and top must be positive")
        return self

    def search_params(self, **overrides) -> SearchParams:
        values = {
            "alpha": self.alpha,
            "beta": self.beta,
            "r": self.top,
            "bounds": frozenset(self.bounds),
            "time_limit": self.time_limit,
        }
        values.update(overrides)
        return SearchParams(**values)


@dataclass(frozen=True)
class BenchSpec:
    """One parameter swept over ``values``; everything else comes from the RunConfig."""

    vary: str
    values: Tuple[SweepValue, ...]
    reps: int = 1
    seed: int = DEFAULT_SEED

    @classmethod
    def parse(cls, vary: str, values: str, reps: int = 1, seed: int = DEFAULT_SEED) -> "BenchSpec":
        """Build from the comma-separated ``--values`` text."""
        tokens = [t.strip() for t in values.split(",") if t.strip()]
        parsed = []
        for token in tokens:
            try:
                parsed.append(float(token) if vary == "sample-fraction" else int(token))
            except ValueError:
                raise BenchSpecError(f"cannot read sweep value {token!r} for {vary}") from None
        return cls(vary, tuple(parsed), reps, seed).validate()

    def validate(self) -> "BenchSpec":
        if self.vary not in SWEEP_VARIABLES:
            raise BenchSpecError(f"cannot sweep {self.vary!r}; choose from {', '.join(SWEEP_VARIABLES)}")
        if not self.values:
            raise BenchSpecError("the sweep needs at least one value")
        if self.reps < 1:
            raise BenchSpecError(f"repetitions must be >= 1, got {self.reps}")
        for value in self.values:
            if self.vary == "sample-fraction":
                if not 0 < value <= 1:
                    raise BenchSpecError(f"sample fractions must lie in (0, 1], got {value}")
            elif value < 1:
                raise BenchSpecError(f"{self.vary} values must be >= 1, got {value}")
        return self

    def runs(self) -> Iterator[Tuple[SweepValue, int]]:
        """``(value, repetition)`` pairs, value-major; repetition ``k`` runs with seed ``seed + k``."""
        for value in self.values:
            for rep in range(self.reps):
                yield value, rep
