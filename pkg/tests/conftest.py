import random

import pytest
from hypothesis import settings

from lajoin.graphs import Graph, edge

settings.register_profile("default", derandomize=True, database=None, deadline=None)
settings.load_profile("default")


def random_graph(rng: random.Random, min_n: int = 3, max_n: int = 8) -> Graph:
    """Random connected-ish simple graph with at least one edge."""
    n = rng.randint(min_n, max_n)
    edges = set()
    for v in range(2, n + 1):
        edges.add(edge(rng.randint(1, v - 1), v))
    extra = rng.randint(0, n)
    for _ in range(extra):
        a, b = rng.sample(range(1, n + 1), 2)
        edges.add(edge(a, b))
    roles = tuple(f"u{i}" for i in range(1, n + 1))
    return Graph(n, tuple(sorted(edges)), roles)


def random_labeling(rng: random.Random, g: Graph):
    from lajoin.labelings import EdgeLabeling

    labels = list(range(1, g.q + 1))
    rng.shuffle(labels)
    return EdgeLabeling(g, dict(zip(g.edges, labels)))


@pytest.fixture
def rng():
    return random.Random(20240817)
