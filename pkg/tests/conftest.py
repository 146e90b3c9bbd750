"""Shared fixtures and the independent enumeration oracle.

The oracle here deliberately avoids every solver code path: partitions are
enumerated as restricted growth strings and cuts recomputed edge by edge,
so derived expected values in the tests rest on nothing but this file.
"""

import pytest

from signedclust import SignedGraph


@pytest.fixture
def g_pathneg():
    """Two nodes joined by a single -1 edge."""
    return SignedGraph.from_edges(2, [(0, 1, -1.0)])


@pytest.fixture
def g_tri():
    """Triangle: (0,1)+1, (1,2)+1, (0,2)-1."""
    return SignedGraph.from_edges(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, -1.0)])


@pytest.fixture
def g_twin():
    """Two +2 pairs joined by two -1 edges; optimum is the pairing, cut -2."""
    return SignedGraph.from_edges(
        4, [(0, 1, 2.0), (2, 3, 2.0), (0, 2, -1.0), (1, 3, -1.0)]
    )


def all_partitions(n):
    """Yield every set partition of range(n) as an assignment list (RGS order)."""
    a = [0] * n

    def rec(i, used):
        if i == n:
            yield a.copy()
            return
        for c in range(used + 1):
            a[i] = c
            yield from rec(i + 1, max(used, c + 1))

    if n == 0:
        yield []
    else:
        yield from rec(0, 0)


def naive_cut(g, assignment):
    """Edge-cut recomputed pair by pair, independent of the library paths."""
    total = 0.0
    for u, v, w in zip(g.edges_u.tolist(), g.edges_v.tolist(), g.edges_w.tolist()):
        if assignment[u] != assignment[v]:
            total += w
    return total


def enum_min_cut(g):
    """Exhaustive minimum cut over all partitions (test-local oracle)."""
    return min(naive_cut(g, a) for a in all_partitions(g.n))


def random_signed_graph(rng, n, p=0.5):
    """Erdos-Renyi style signed graph with +/-1 weights."""
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, 1.0 if rng.random() < 0.5 else -1.0))
    return SignedGraph.from_edges(n, edges)


def random_assignment(rng, n, kmax=None):
    kmax = kmax or max(1, n)
    return rng.integers(0, kmax, size=n)
