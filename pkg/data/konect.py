"""
KONECT-style text codec.

Edge file: UTF-8, lines starting with '%' are comments, blank lines are
skipped, data lines are ``<upper id> <lower id> [ignored ...]`` with 1-based
whitespace-separated ids.

Weight file: lines ``U <id> <w>`` or ``V <id> <w>`` with integer ``w >= 0``;
'%' comments and blank lines are skipped. Vertices without a weight line get
weight 1.

Layer sizes are the largest id seen for that layer in either file, so a
weight file listing every vertex preserves isolated vertices on round-trip.
"""
import re
from typing import Dict, Iterable, List, Optional, TextIO, Tuple

from data.graph import LOWER, UPPER, GraphValidationError, WeightedBipartiteGraph

_INT = re.compile(r"[+-]?\d+")
_NUMBER = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")


class GraphParseError(ValueError):
    """Raised when an edge or weight line cannot be parsed; names the offending line."""

    def __init__(self, source: str, line_number: int, message: str):
        super().__init__(f"{source}: line {line_number}: {message}")
        self.source = source
        self.line_number = line_number


def _data_lines(stream: TextIO) -> Iterable[Tuple[int, List[str]]]:
    for line_number, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        yield line_number, line.split()


def _parse_id(token: str, source: str, line_number: int) -> int:
    if not _INT.fullmatch(token):
        raise GraphParseError(source, line_number, f"expected an integer vertex id, got {token!r}")
    vid = int(token)
    if vid < 1:
        raise GraphValidationError(f"{source}: line {line_number}: vertex ids are 1-based, got {vid}")
    return vid


def parse_edges(stream: TextIO, source: str = "edges") -> List[Tuple[int, int]]:
    edges = []
    for line_number, tokens in _data_lines(stream):
        if len(tokens) < 2:
            raise GraphParseError(source, line_number, "expected '<upper id> <lower id>'")
        edges.append(
            (_parse_id(tokens[0], source, line_number), _parse_id(tokens[1], source, line_number))
        )
    return edges


def parse_weights(stream: TextIO, source: str = "weights") -> Dict[Tuple[str, int], int]:
    weights: Dict[Tuple[str, int], int] = {}
    for line_number, tokens in _data_lines(stream):
        if len(tokens) != 3 or tokens[0] not in (UPPER, LOWER):
            raise GraphParseError(source, line_number, "expected 'U <id> <w>' or 'V <id> <w>'")
        layer, id_token, w_token = tokens
        vid = _parse_id(id_token, source, line_number)
        if not _INT.fullmatch(w_token):
            if _NUMBER.fullmatch(w_token):
                raise GraphValidationError(
                    f"{source}: line {line_number}: weights must be integers, got {w_token}"
                )
            raise GraphParseError(source, line_number, f"expected an integer weight, got {w_token!r}")
        w = int(w_token)
        if w < 0:
            raise GraphValidationError(f"{source}: line {line_number}: negative weight {w}")
        weights[(layer, vid)] = w
    return weights


def load_graph(edge_source: TextIO, weight_source: Optional[TextIO] = None) -> WeightedBipartiteGraph:
    """
    Parse an edge stream and an optional weight stream into a graph.

    Raises:
        GraphParseError: malformed line (the message names the line number).
        GraphValidationError: id below 1 or a negative / non-integer weight.
    """
    edges = parse_edges(edge_source, getattr(edge_source, "name", "edges"))
    weights = (
        parse_weights(weight_source, getattr(weight_source, "name", "weights"))
        if weight_source is not None
        else {}
    )
    n_u = max([u for u, _ in edges] + [vid for (layer, vid) in weights if layer == UPPER], default=0)
    n_v = max([v for _, v in edges] + [vid for (layer, vid) in weights if layer == LOWER], default=0)
    return WeightedBipartiteGraph.from_edges(
        n_u,
        n_v,
        edges,
        [weights.get((UPPER, i), 1) for i in range(1, n_u + 1)],
        [weights.get((LOWER, j), 1) for j in range(1, n_v + 1)],
    )


def write_edges(graph: WeightedBipartiteGraph, stream: TextIO) -> None:
    stream.write("% bip unweighted\n")
    stream.write(f"% {graph.edge_count} {graph.upper_count} {graph.lower_count}\n")
    for u, v in graph.edges():
        stream.write(f"{u} {v}\n")


def write_weights(graph: WeightedBipartiteGraph, stream: TextIO) -> None:
    for i, w in enumerate(graph.upper_weights, start=1):
        stream.write(f"{UPPER} {i} {w}\n")
    for j, w in enumerate(graph.lower_weights, start=1):
        stream.write(f"{LOWER} {j} {w}\n")
