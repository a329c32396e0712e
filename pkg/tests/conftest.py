import random

import pytest

from edgesector.graphs import Graph, corpus


def random_connected_graph(rng: random.Random, n_max: int = 10, extra_max: int = 6) -> Graph:
    """Seeded sparse connected graph: random spanning tree plus extra edges."""
    n = rng.randint(2, n_max)
    edges = {(min(v, u), max(v, u)) for v in range(1, n) for u in [rng.randrange(v)]}
    possible = [
        (a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges
    ]
    rng.shuffle(possible)
    for extra in possible[: rng.randint(0, min(extra_max, len(possible)))]:
        edges.add(extra)
    return Graph.from_edges(n, edges)


def random_population(seed: int, count: int, n_max: int = 10, extra_max: int = 6):
    rng = random.Random(seed)
    return [random_connected_graph(rng, n_max, extra_max) for _ in range(count)]


@pytest.fixture(scope="session")
def corpus_graphs():
    return {entry.name: entry.graph for entry in corpus()}


@pytest.fixture(scope="session")
def random_200():
    """The seeded 200-graph population shared by the acceptance criteria."""
    return random_population(seed=20240601, count=200, n_max=10)


@pytest.fixture(scope="session")
def random_50_small():
    return random_population(seed=777, count=50, n_max=8, extra_max=5)
