"""Shared fixture graphs.

All expected values in the test suite are either hand-checkable from the
construction, frozen from a brute-force oracle run, or asserted directly
against the oracles at test time.
"""

import pytest

from twok2 import Graph


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a, b):
    return Graph(a + b, [(u, v) for u in range(a) for v in range(a, a + b)])


def star(leaves):
    return Graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def p5():
    return path(5)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def k23():
    # sides {0, 1} and {2, 3, 4}
    return Graph(5, [(u, v) for u in (0, 1) for v in (2, 3, 4)])


@pytest.fixture
def k33():
    return Graph(6, [(u, v) for u in (0, 1, 2) for v in (3, 4, 5)])


@pytest.fixture
def diamond():
    # K4 minus the edge {2, 3}
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def bowtie():
    # triangles {0, 1, 2} and {2, 3, 4} sharing vertex 2
    return Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def triangle_tail():
    # triangle {0, 1, 2} with pendant path 2-3, 3-4
    return Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])


@pytest.fixture
def split_example():
    # clique {0, 1, 2}; independent {3, 4}, both adjacent to 0 only
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)])
