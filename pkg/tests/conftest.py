import itertools
import random

import pytest

from ramseylab.graphs import Graph


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def random_graph(rng: random.Random, n_range=(2, 9), max_edges=16) -> Graph:
    n = rng.randint(*n_range)
    pool = list(itertools.combinations(range(n), 2))
    m = rng.randint(0, min(max_edges, len(pool)))
    return Graph(n, rng.sample(pool, m))
