import numpy as np
import pytest

from tgbs.graphs import Graph


def graph_from_edges(n, edges, weights=None):
    adj = np.zeros((n, n))
    for u, v in edges:
        adj[u, v] = adj[v, u] = 1.0
    return Graph(adj, None if weights is None else np.array(weights, dtype=float))


@pytest.fixture
def triangle():
    return graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3():
    # a - b - c
    return graph_from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def k4():
    return graph_from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


@pytest.fixture
def k4_pendant():
    # K4 on nodes 0-3 plus a pendant node 4 attached to node 0
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)] + [(0, 4)]
    return graph_from_edges(5, edges)


@pytest.fixture
def triangle_pendant():
    # triangle 0-1-2 plus pendant node 3 attached to node 0
    return graph_from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


@pytest.fixture
def two_triangles_weighted():
    # disjoint triangles {0,1,2} (heavy) and {3,4,5} (light)
    g = graph_from_edges(
        6,
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        weights=[0.9, 0.9, 0.9, 0.1, 0.1, 0.1],
    )
    return g
