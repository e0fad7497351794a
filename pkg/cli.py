"""
CLI entry point for top-r influential community search.

Usage:
    uv run communities <command> [options]
    python cli.py <command> [options]

Examples:
    uv run cli.py gen --nu 50 --nv 40 --m 400 --seed 7 --output g.edges
    uv run cli.py run --input g.edges --weights g.edges.weights --algo upperbound --alpha 2 --beta 2 --top 5
    uv run cli.py run --input g.edges --gen-weights-seed 3 --algo newfra --format csv
    uv run cli.py bench --input g.edges --algo slimtree --vary alpha --values 2,3,4 --reps 3
    uv run cli.py oracle --input small.edges --algo pruning --top 3
"""
import argparse
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional, TextIO

from bench import (
    EXIT_OK,
    EXIT_PARSE,
    EXIT_UNEXPECTED,
    EXIT_VALIDATION,
    ORACLE_ALGO,
    SWEEP_VARIABLES,
    BenchSpec,
    BenchSpecError,
    RunConfig,
    cmd_bench,
    cmd_gen,
    cmd_oracle,
    cmd_run,
)
from bench._constants import DEFAULT_ALPHA, DEFAULT_BETA, DEFAULT_SEED, DEFAULT_TOP, DEFAULT_W_MAX
from data import GraphParseError, GraphValidationError, UndefinedInfluenceError
from oracle import OracleRefusalError
from search import ALGORITHMS, BOUND_NAMES, DEFAULT_BOUNDS, DEFAULT_TIME_LIMIT, SearchConfigError


def _progress(fraction: float, label: str) -> None:
    pct = int(fraction * 100)
    print(f"[{pct:3d}%] {label}", file=sys.stderr, flush=True)


def _bounds(text: str) -> tuple:
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    unknown = [n for n in names if n not in BOUND_NAMES]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown bound(s) {', '.join(unknown)}; choose from {','.join(BOUND_NAMES)}")
    return names


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", type=Path, default=None, help="KONECT edge file")
    parser.add_argument("--weights", type=Path, default=None, help="Weight file ('U <id> <w>' / 'V <id> <w>' lines)")
    parser.add_argument(
        "--gen-weights-seed",
        type=int,
        default=None,
        dest="gen_weights_seed",
        help="Redraw every weight uniformly from [1, --wmax] with this seed",
    )
    parser.add_argument("--wmax", type=int, default=DEFAULT_W_MAX, dest="w_max", help="Largest generated weight (default: 100)")
    parser.add_argument(
        "--algo",
        choices=list(ALGORITHMS) + [ORACLE_ALGO],
        default="upperbound",
        help="Search algorithm (default: upperbound)",
    )
    parser.add_argument("--alpha", type=int, default=DEFAULT_ALPHA, help="Upper-layer degree threshold")
    parser.add_argument("--beta", type=int, default=DEFAULT_BETA, help="Lower-layer degree threshold")
    parser.add_argument("--top", type=int, default=DEFAULT_TOP, help="Number of communities r (default: 10)")
    parser.add_argument(
        "--bounds",
        type=_bounds,
        default=DEFAULT_BOUNDS,
        help="Comma list from ub1,ub2,ub3 used by upperbound (default: ub1,ub2)",
    )
    parser.add_argument(
        "--time-limit",
        type=float,
        default=DEFAULT_TIME_LIMIT,
        dest="time_limit",
        help="Wall-clock budget per search in seconds (default: 3600)",
    )
    parser.add_argument("--format", choices=["json", "csv"], default="json", help="Output format (default: json)")
    parser.add_argument("--output", type=Path, default=None, help="Output path (default: standard output)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for generation and sampling (default: 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="communities",
        description="Find the top-r (alpha, beta)-influential communities of a vertex-weighted bipartite graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="Search one graph")
    _add_common(run)

    bench = sub.add_parser("bench", help="Sweep one parameter and write a CSV row per run")
    _add_common(bench)
    bench.add_argument("--vary", choices=SWEEP_VARIABLES, required=True, help="Parameter to sweep")
    bench.add_argument("--values", required=True, help="Comma-separated sweep values")
    bench.add_argument("--reps", type=int, default=1, help="Repetitions per value (default: 1)")

    gen = sub.add_parser("gen", help="Write a seeded random graph")
    _add_common(gen)
    gen.add_argument("--nu", type=int, required=True, help="Upper layer size")
    gen.add_argument("--nv", type=int, required=True, help="Lower layer size")
    gen.add_argument("--m", type=int, required=True, help="Number of distinct edges")

    oracle = sub.add_parser("oracle", help="Brute-force enumeration report, optionally scoring an algorithm")
    _add_common(oracle)
    oracle.set_defaults(algo=ORACLE_ALGO)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input=args.input,
        weights=args.weights,
        gen_weights_seed=args.gen_weights_seed,
        w_max=args.w_max,
        algo=args.algo,
        alpha=args.alpha,
        beta=args.beta,
        top=args.top,
        bounds=tuple(args.bounds),
        time_limit=args.time_limit,
        format=args.format,
        output=args.output,
        seed=args.seed,
        nu=getattr(args, "nu", None),
        nv=getattr(args, "nv", None),
        m=getattr(args, "m", None),
    )


@contextmanager
def _open_output(path: Optional[Path]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        sys.stdout.flush()
        return
    with path.open("w", encoding="utf-8", newline="\n") as stream:
        yield stream


def _dispatch(args: argparse.Namespace, config: RunConfig) -> int:
    if config.command == "gen":
        cmd_gen(config)
        return EXIT_OK
    if config.command == "bench":
        spec = BenchSpec.parse(args.vary, args.values, args.reps, config.seed)
        with _open_output(config.output) as stream:
            return cmd_bench(config, spec, stream, progress_callback=_progress)
    with _open_output(config.output) as stream:
        if config.command == "oracle":
            return cmd_oracle(config, stream)
        return cmd_run(config, stream)


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=logging.INFO,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config(args)

    try:
        return _dispatch(args, config)
    except GraphParseError as e:
        print(f"ERROR (parse): {e}", file=sys.stderr)
        return EXIT_PARSE
    except (
        GraphValidationError,
        UndefinedInfluenceError,
        SearchConfigError,
        BenchSpecError,
        OracleRefusalError,
    ) as e:
        print(f"ERROR (validation): {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as e:
        print(f"UNEXPECTED ERROR ({config.command}): {e}", file=sys.stderr)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
