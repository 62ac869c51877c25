from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from mimkit.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def seeded_random_graphs(count: int, max_n: int, seed: int = 0, min_n: int = 1) -> list[Graph]:
    from mimkit.generators import random_graph

    rng = random.Random(seed)
    return [random_graph(rng.randint(min_n, max_n), rng.uniform(0.15, 0.7), rng) for _ in range(count)]


@pytest.fixture
def p4() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def c4() -> Graph:
    # a-b-c-d-a with a=0, b=1, c=2, d=3
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def c6() -> Graph:
    return Graph(6, [(i, (i + 1) % 6) for i in range(6)])


@pytest.fixture
def k33() -> Graph:
    return Graph(6, [(i, j) for i in range(3) for j in range(3, 6)])
