import random

import pytest

from superkappa import Graph, complete, complete_bipartite, cycle


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def k23():
    return complete_bipartite(2, 3)


@pytest.fixture
def k4():
    return complete(4)


def random_graph(rng, max_n=8, connected_only=True):
    """Small seeded random graph for oracle corpora."""
    while True:
        n = rng.randint(2, max_n)
        p = rng.uniform(0.3, 0.9)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        G = Graph(n, edges)
        if not connected_only or G.is_connected():
            return G


def seeded_corpus(seed, count, max_n=8):
    rng = random.Random(seed)
    return [random_graph(rng, max_n=max_n) for _ in range(count)]
