"""Clusterings of a signed graph and the metrics defined on them.

A clustering assigns every node exactly one cluster id; the objective
throughout is the edge-cut, the summed weight of edges whose endpoints lie
in different clusters. The sum of all negative edge weights is an absolute
lower bound on the cut of any clustering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple, Union

import numpy as np

from .graph import SignedGraph

__all__ = [
    "Clustering",
    "edge_cut",
    "z_value",
    "cut_edges",
    "symmetric_difference",
    "project_to_finer",
]

AssignmentLike = Union["Clustering", np.ndarray, Iterable[int]]


def as_assignment(c: AssignmentLike) -> np.ndarray:
    arr = np.asarray(getattr(c, "assignment", c), dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError("assignment must be one cluster id per node")
    return arr


@dataclass(frozen=True, eq=False)
class Clustering:
    """A node -> cluster assignment with its cached edge-cut.

    The cut is maintained exactly by every operation in this package;
    ``Clustering.from_assignment`` recomputes it from scratch.
    """

    assignment: np.ndarray
    cut: float

    def __post_init__(self):
        arr = np.asarray(self.assignment, dtype=np.int64)
        arr.setflags(write=False)
        object.__setattr__(self, "assignment", arr)

    @classmethod
    def from_assignment(cls, g: SignedGraph, assignment: AssignmentLike) -> "Clustering":
        arr = as_assignment(assignment)
        if arr.shape != (g.n,):
            raise ValueError(f"assignment covers {arr.shape[0]} nodes, graph has {g.n}")
        return cls(arr, edge_cut(g, arr))

    @classmethod
    def singletons(cls, g: SignedGraph) -> "Clustering":
        return cls(np.arange(g.n, dtype=np.int64), g.total_weight)

    @classmethod
    def all_in_one(cls, g: SignedGraph) -> "Clustering":
        return cls(np.zeros(g.n, dtype=np.int64), 0.0)

    @property
    def n(self) -> int:
        return self.assignment.shape[0]

    @property
    def k(self) -> int:
        """Number of non-empty clusters (computed lazily)."""
        return int(np.unique(self.assignment).size)

    def relabeled(self) -> "Clustering":
        """Equivalent clustering with ids 0..k-1 in order of first occurrence."""
        _, inverse = np.unique(self.assignment, return_inverse=True)
        seen: dict = {}
        out = np.empty_like(inverse)
        for i, c in enumerate(inverse.tolist()):
            if c not in seen:
                seen[c] = len(seen)
            out[i] = seen[c]
        return Clustering(out, self.cut)


def edge_cut(g: SignedGraph, c: AssignmentLike) -> float:
    """Summed weight of the edges crossing clusters. Exact."""
    a = as_assignment(c)
    crossing = a[g.edges_u] != a[g.edges_v]
    return float(g.edges_w[crossing].sum())


def z_value(g: SignedGraph, cut: float) -> float:
    """Normalized cut quality, ``1 - cut / (sum of negative edge weights)``.

    Zero means the absolute lower bound was reached; lower is better.
    Undefined on graphs without negative edges.
    """
    if g.sum_neg == 0:
        raise ValueError("z_value is undefined: graph has no negative edges")
    return 1.0 - cut / g.sum_neg


def cut_edges(g: SignedGraph, c: AssignmentLike) -> Tuple[Tuple[int, int], ...]:
    """The edges with endpoints in distinct clusters, sorted canonically."""
    a = as_assignment(c)
    crossing = a[g.edges_u] != a[g.edges_v]
    # edge arrays are already lexicographically sorted with u < v
    return tuple(zip(g.edges_u[crossing].tolist(), g.edges_v[crossing].tolist()))


def symmetric_difference(a: Iterable[Tuple[int, int]], b: Iterable[Tuple[int, int]]) -> int:
    """|a triangle b| between two cut-edge sets of the same graph."""
    return len(frozenset(a) ^ frozenset(b))


def project_to_finer(coarse: Clustering, mapping: np.ndarray) -> Clustering:
    """Lift a coarse clustering through a contraction map.

    Fine node ``v`` receives the cluster id of coarse node ``mapping[v]``;
    the edge-cut value is unchanged, exactly, because contraction sums all
    and only the inter-cluster edge weights.
    """
    mapping = np.asarray(mapping, dtype=np.int64)
    if mapping.max(initial=-1) >= coarse.assignment.shape[0]:
        raise ValueError("mapping refers to coarse nodes outside the clustering")
    return Clustering(coarse.assignment[mapping], coarse.cut)
