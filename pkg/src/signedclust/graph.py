"""Signed graph storage, normalization and cluster contraction.

A signed graph is undirected, has no self or parallel edges, and every edge
carries a nonzero real weight (positive = attraction, negative = repulsion).
The adjacency is kept in a compressed sparse layout sorted by neighbor id,
which makes traversal cache friendly and iteration order deterministic.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

__all__ = ["SignedGraph", "normalize", "contract"]


class SignedGraph:
    """Immutable undirected signed graph with weighted nodes.

    Attributes
    ----------
    n : int
        Number of nodes (ids are 0..n-1).
    node_weight : ndarray of float64, shape (n,)
        Positive weight per node; defaults to 1 everywhere.
    indptr, indices, weights : ndarray
        CSR-style adjacency. Neighbors of ``v`` are
        ``indices[indptr[v]:indptr[v+1]]`` with matching ``weights``,
        sorted by neighbor id.
    edges_u, edges_v, edges_w : ndarray
        Each undirected edge exactly once with ``edges_u < edges_v``,
        sorted lexicographically.
    m_plus, m_minus : int
        Counts of positive / negative edges.
    sum_neg : float
        Sum of all negative edge weights; an absolute lower bound for the
        edge-cut of any clustering.
    original_ids : tuple or None
        Side table mapping internal ids back to the ids found in the
        input file, when the graph came from one.
    """

    __slots__ = (
        "n",
        "node_weight",
        "indptr",
        "indices",
        "weights",
        "edges_u",
        "edges_v",
        "edges_w",
        "m_plus",
        "m_minus",
        "sum_neg",
        "original_ids",
        "_adj_lists",
    )

    def __init__(
        self,
        n: int,
        edges_u: np.ndarray,
        edges_v: np.ndarray,
        edges_w: np.ndarray,
        node_weight: Optional[np.ndarray] = None,
        original_ids: Optional[Sequence[int]] = None,
        _checked: bool = False,
    ):
        edges_u = np.asarray(edges_u, dtype=np.int64)
        edges_v = np.asarray(edges_v, dtype=np.int64)
        edges_w = np.asarray(edges_w, dtype=np.float64)
        if not _checked:
            edges_u, edges_v, edges_w = _canonical_edges(n, edges_u, edges_v, edges_w)
        self.n = int(n)
        self.edges_u = edges_u
        self.edges_v = edges_v
        self.edges_w = edges_w
        if node_weight is None:
            node_weight = np.ones(self.n, dtype=np.float64)
        else:
            node_weight = np.asarray(node_weight, dtype=np.float64)
            if node_weight.shape != (self.n,):
                raise ValueError("node_weight must have one entry per node")
            if np.any(node_weight <= 0):
                raise ValueError("node weights must be positive")
        self.node_weight = node_weight
        self.indptr, self.indices, self.weights = _build_csr(
            self.n, edges_u, edges_v, edges_w
        )
        self.m_plus = int(np.count_nonzero(edges_w > 0))
        self.m_minus = int(np.count_nonzero(edges_w < 0))
        self.sum_neg = float(edges_w[edges_w < 0].sum())
        self.original_ids = tuple(original_ids) if original_ids is not None else None
        self._adj_lists = None
        for arr in (
            self.node_weight,
            self.indptr,
            self.indices,
            self.weights,
            self.edges_u,
            self.edges_v,
            self.edges_w,
        ):
            arr.setflags(write=False)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int, float]],
        node_weight: Optional[np.ndarray] = None,
        original_ids: Optional[Sequence[int]] = None,
    ) -> "SignedGraph":
        """Build a graph from an iterable of (u, v, w) triples.

        Each unordered pair may appear at most once and weights must be
        nonzero; use :func:`normalize` for raw multi-edge input.
        """
        rows = list(edges)
        if rows:
            u, v, w = (np.asarray(col) for col in zip(*rows))
        else:
            u = v = np.empty(0, dtype=np.int64)
            w = np.empty(0, dtype=np.float64)
        return cls(n, u, v, w, node_weight=node_weight, original_ids=original_ids)

    @property
    def m(self) -> int:
        """Number of undirected edges."""
        return self.edges_w.shape[0]

    @property
    def total_weight(self) -> float:
        """Sum of all edge weights (the edge-cut of the singleton clustering)."""
        return float(self.edges_w.sum())

    def neighbors(self, v: int) -> Tuple[np.ndarray, np.ndarray]:
        """Neighbor ids and edge weights of node ``v`` (views, do not write)."""
        lo, hi = self.indptr[v], self.indptr[v + 1]
        return self.indices[lo:hi], self.weights[lo:hi]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def adjacency_lists(self):
        """Plain-list copy of the CSR arrays, cached.

        Tight Python loops over list ints are several times faster than
        repeated ndarray scalar indexing; the hot local-search paths use this.
        """
        if self._adj_lists is None:
            self._adj_lists = (
                self.indptr.tolist(),
                self.indices.tolist(),
                self.weights.tolist(),
            )
        return self._adj_lists

    def validate(self) -> None:
        """Check every structural invariant; raises AssertionError on breakage."""
        assert self.indptr.shape == (self.n + 1,)
        assert np.all(self.edges_u < self.edges_v), "edges must satisfy u < v"
        assert np.all(self.edges_u >= 0) and np.all(self.edges_v < self.n)
        assert np.all(self.edges_w != 0), "zero-weight edges are not allowed"
        pair_keys = self.edges_u * self.n + self.edges_v
        assert np.all(np.diff(pair_keys) > 0), "parallel or unsorted edges"
        assert self.m_plus + self.m_minus == self.m
        # symmetry: each undirected edge appears in both endpoint rows
        assert self.indices.shape[0] == 2 * self.m
        for u, v, w in zip(self.edges_u, self.edges_v, self.edges_w):
            nbrs_u, w_u = self.neighbors(int(u))
            nbrs_v, w_v = self.neighbors(int(v))
            iu = np.searchsorted(nbrs_u, v)
            iv = np.searchsorted(nbrs_v, u)
            assert nbrs_u[iu] == v and w_u[iu] == w
            assert nbrs_v[iv] == u and w_v[iv] == w

    def __repr__(self) -> str:
        return (
            f"SignedGraph(n={self.n}, m={self.m}, m_plus={self.m_plus}, "
            f"m_minus={self.m_minus}, sum_neg={self.sum_neg:g})"
        )

    # slots + frozen arrays make the graph effectively immutable, but the
    # adjacency-list cache is filled lazily; allow that one write.
    def __setattr__(self, name, value):
        if name != "_adj_lists" and hasattr(self, "_adj_lists"):
            raise AttributeError("SignedGraph is immutable")
        object.__setattr__(self, name, value)


def _canonical_edges(n, u, v, w):
    if np.any(u == v):
        raise ValueError("self edges are not allowed")
    if u.size and (min(u.min(), v.min()) < 0 or max(u.max(), v.max()) >= n):
        raise ValueError("edge endpoint out of range")
    if np.any(w == 0):
        raise ValueError("edge weights must be nonzero")
    lo = np.minimum(u, v)
    hi = np.maximum(u, v)
    order = np.lexsort((hi, lo))
    lo, hi, w = lo[order], hi[order], w[order]
    keys = lo * n + hi
    if keys.size and np.any(np.diff(keys) == 0):
        raise ValueError("parallel edges are not allowed (normalize first)")
    return lo, hi, np.ascontiguousarray(w, dtype=np.float64)


def _build_csr(n, eu, ev, ew):
    deg = np.bincount(eu, minlength=n) + np.bincount(ev, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(deg, out=indptr[1:])
    # stack both directions and sort once by (source, neighbor)
    all_src = np.concatenate([eu, ev])
    all_dst = np.concatenate([ev, eu])
    all_w = np.concatenate([ew, ew])
    order = np.lexsort((all_dst, all_src))
    return indptr, all_dst[order], all_w[order]


def normalize(
    records: Iterable[Tuple[int, int, float]],
    n: int,
    raw_weights: bool = False,
    node_weight: Optional[np.ndarray] = None,
    original_ids: Optional[Sequence[int]] = None,
) -> SignedGraph:
    """Merge raw edge records into a valid signed graph.

    Self edges are dropped. All records on the same unordered pair are summed
    into a single edge; a pair whose sum is exactly zero yields no edge.
    Unless ``raw_weights`` is set, the summed weight is quantized to +1 or -1
    according to its sign, which is the canonical form benchmark instances
    are converted to.
    """
    sums: dict = {}
    for u, v, w in records:
        u = int(u)
        v = int(v)
        if u == v:
            continue
        if u < 0 or v < 0 or u >= n or v >= n:
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        key = (u, v) if u < v else (v, u)
        sums[key] = sums.get(key, 0.0) + float(w)
    eu, ev, ew = [], [], []
    for (u, v), w in sums.items():
        if w == 0.0:
            continue
        eu.append(u)
        ev.append(v)
        ew.append(w if raw_weights else (1.0 if w > 0 else -1.0))
    return SignedGraph(
        n,
        np.array(eu, dtype=np.int64),
        np.array(ev, dtype=np.int64),
        np.array(ew, dtype=np.float64),
        node_weight=node_weight,
        original_ids=original_ids,
    )


def contract(g: SignedGraph, clustering) -> Tuple[SignedGraph, np.ndarray]:
    """Contract each cluster to a single coarse node.

    Returns the coarse graph and the fine-node -> coarse-node map. Coarse
    node weight is the sum of the member node weights; parallel inter-cluster
    edges are summed into one, and pairs summing to exactly zero are dropped
    (they cannot contribute to any cut). Edge-cut is preserved: any coarse
    clustering lifted through the map has exactly the same cut on ``g``.
    """
    assignment = np.asarray(getattr(clustering, "assignment", clustering), dtype=np.int64)
    if assignment.shape != (g.n,):
        raise ValueError("clustering must assign every node")
    # re-index cluster ids to 0..k-1 in order of first occurrence
    _, mapping = np.unique(assignment, return_inverse=True)
    first_pos = np.full(mapping.max() + 1 if g.n else 0, g.n, dtype=np.int64)
    np.minimum.at(first_pos, mapping, np.arange(g.n))
    rank = np.argsort(np.argsort(first_pos, kind="stable"), kind="stable")
    mapping = rank[mapping]
    k = int(mapping.max()) + 1 if g.n else 0

    coarse_weight = np.bincount(mapping, weights=g.node_weight, minlength=k)
    cu = mapping[g.edges_u]
    cv = mapping[g.edges_v]
    cross = cu != cv
    cu, cv, cw = cu[cross], cv[cross], g.edges_w[cross]
    lo = np.minimum(cu, cv)
    hi = np.maximum(cu, cv)
    keys = lo * k + hi
    uniq, inverse = np.unique(keys, return_inverse=True)
    summed = np.bincount(inverse, weights=cw, minlength=uniq.shape[0])
    keep = summed != 0.0
    uniq, summed = uniq[keep], summed[keep]
    coarse = SignedGraph(
        k,
        uniq // k,
        uniq % k,
        summed,
        node_weight=coarse_weight,
        _checked=True,
    )
    return coarse, mapping
