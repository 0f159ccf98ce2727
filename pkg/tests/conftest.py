import pytest

from sachs4 import from_edges


@pytest.fixture
def path4():
    return from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def path5():
    return from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])


@pytest.fixture
def cycle4():
    return from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def cycle6():
    return from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])


def complete_bipartite(a, b):
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return from_edges(a + b, edges)


@pytest.fixture
def k23():
    return complete_bipartite(2, 3)
