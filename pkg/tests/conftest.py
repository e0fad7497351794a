import pytest

from strategies import complete_bipartite, graph_from_text


@pytest.fixture
def k22():
    """K_{2,2} with upper weights 1, 2 and lower weights 3, 4; influence 5."""
    return complete_bipartite([1, 2], [3, 4])


@pytest.fixture
def cascade():
    """Deleting v3 peels u3 at alpha = beta = 2, leaving {u1, u2, v1, v2}."""
    return graph_from_text("1 1\n1 2\n2 1\n2 2\n3 2\n3 3\n")


@pytest.fixture
def dominant_pair():
    """
    A heavy K_{2,2} (all weights 10, vertices u1-u2 / v1-v2) and a light K_{3,3}
    (all weights 1, vertices u3-u5 / v3-v5) with no edges between them.
    """
    edges = [(1, 1), (1, 2), (2, 1), (2, 2)]
    edges += [(u, v) for u in (3, 4, 5) for v in (3, 4, 5)]
    lines = "".join(f"{u} {v}\n" for u, v in edges)
    weights = "".join(f"U {i} {10 if i <= 2 else 1}\nV {i} {10 if i <= 2 else 1}\n" for i in range(1, 6))
    return graph_from_text(lines, weights)


@pytest.fixture
def graph_files(tmp_path):
    """Write the K_{2,2} fixture to disk; returns (edge path, weight path)."""
    edges = tmp_path / "k22.edges"
    weights = tmp_path / "k22.weights"
    edges.write_text("% bip unweighted\n1 1\n1 2\n2 1\n2 2\n", encoding="utf-8")
    weights.write_text("U 1 1\nU 2 2\nV 1 3\nV 2 4\n", encoding="utf-8")
    return edges, weights
