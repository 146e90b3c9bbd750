"""Label-propagation clustering and the contraction hierarchy.

Coarsening alternates two steps until nothing merges anymore: cluster the
current graph with label propagation, then contract the clustering. Label
propagation starts from singletons and greedily moves each node to the
neighboring cluster with the largest summed connection weight, falling back
to a fresh singleton when every connection is negative, so the edge-cut
never increases. An optional constraint confines clusters to "effective
blocks", which is how a previous clustering (or two parents' clusterings)
can be forced to survive contraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .clustering import Clustering, cut_edges
from .graph import SignedGraph, contract

__all__ = [
    "Constraint",
    "Hierarchy",
    "label_propagation_cluster",
    "build_hierarchy",
]

DEFAULT_LP_ROUNDS = 10


@dataclass(frozen=True)
class Constraint:
    """Restricts which nodes may ever share a cluster during coarsening.

    ``block[v]`` is the effective block id of node ``v``; nodes in different
    blocks never merge. ``block is None`` means unconstrained.

    subset-of-one keeps every cluster inside one cluster of a reference
    clustering. subset-of-two uses the connected components of the graph
    after removing the union of both references' cut edges, so every cut
    edge of either reference is blocked from contraction.
    """

    mode: str
    block: Optional[np.ndarray]

    @classmethod
    def none(cls) -> "Constraint":
        return cls("none", None)

    @classmethod
    def subset_of(cls, reference: Clustering) -> "Constraint":
        return cls("subset-of-one", np.asarray(reference.assignment, dtype=np.int64))

    @classmethod
    def subset_of_two(cls, g: SignedGraph, a: Clustering, b: Clustering) -> "Constraint":
        aa = a.assignment
        bb = b.assignment
        keep = (aa[g.edges_u] == aa[g.edges_v]) & (bb[g.edges_u] == bb[g.edges_v])
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in zip(g.edges_u[keep].tolist(), g.edges_v[keep].tolist()):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        block = np.fromiter((find(v) for v in range(g.n)), dtype=np.int64, count=g.n)
        return cls("subset-of-two", block)

    def blocked_edges(self, g: SignedGraph):
        """Edges whose endpoints lie in different effective blocks."""
        if self.block is None:
            return ()
        return cut_edges(g, self.block)


@dataclass
class Hierarchy:
    """Stack of coarser and coarser graphs with the contraction maps.

    ``graphs[0]`` is the input; ``maps[i]`` sends nodes of ``graphs[i]`` to
    nodes of ``graphs[i+1]``. Node counts strictly decrease, so the depth is
    bounded by n.
    """

    graphs: List[SignedGraph]
    maps: List[np.ndarray]

    @property
    def coarsest(self) -> SignedGraph:
        return self.graphs[-1]

    @property
    def depth(self) -> int:
        return len(self.graphs)

    def composed_map(self) -> np.ndarray:
        """Map from level-0 nodes straight to coarsest nodes."""
        comp = np.arange(self.graphs[0].n, dtype=np.int64)
        for m in self.maps:
            comp = m[comp]
        return comp


def _lp_sweeps(g: SignedGraph, assignment: list, rounds: int, block, rng, cut: float):
    """Run up to ``rounds`` label-propagation sweeps in place.

    ``assignment`` is a plain int list (mutated); returns the updated cut.
    Per sweep every node is visited once in a fresh random order and moved
    to the candidate cluster of maximum connection weight, the current
    cluster competing on equal footing and ties broken uniformly at random.
    A negative maximum sends the node to a fresh singleton. Stops early on a
    sweep with no moves.
    """
    n = g.n
    indptr, indices, weights = g.adjacency_lists()
    size: dict = {}
    for c in assignment:
        size[c] = size.get(c, 0) + 1
    next_id = max(assignment) + 1 if assignment else 0
    for _ in range(rounds):
        moved = 0
        for u in rng.permutation(n).tolist():
            lo = indptr[u]
            hi = indptr[u + 1]
            if lo == hi:
                continue
            cur = assignment[u]
            conn = {cur: 0.0}
            if block is None:
                for i in range(lo, hi):
                    c = assignment[indices[i]]
                    if c in conn:
                        conn[c] += weights[i]
                    else:
                        conn[c] = weights[i]
            else:
                bu = block[u]
                for i in range(lo, hi):
                    v = indices[i]
                    if block[v] != bu:
                        continue
                    c = assignment[v]
                    if c in conn:
                        conn[c] += weights[i]
                    else:
                        conn[c] = weights[i]
            cur_conn = conn[cur]
            best = None
            ties = None
            for c, w in conn.items():
                if best is None or w > best:
                    best = w
                    ties = [c]
                elif w == best:
                    ties.append(c)
            if best < 0.0:
                # all connections repel: isolate the node (it necessarily
                # has cluster mates, otherwise its own entry would be 0)
                target = next_id
                next_id += 1
                gain = -cur_conn
            else:
                target = ties[0] if len(ties) == 1 else ties[int(rng.integers(len(ties)))]
                if target == cur:
                    continue
                gain = best - cur_conn
            assignment[u] = target
            size[cur] -= 1
            size[target] = size.get(target, 0) + 1
            cut -= gain
            moved += 1
        if moved == 0:
            break
    return cut


def label_propagation_cluster(
    g: SignedGraph,
    rounds: int = DEFAULT_LP_ROUNDS,
    constraint: Optional[Constraint] = None,
    rng: Optional[np.random.Generator] = None,
) -> Clustering:
    """Cluster ``g`` by label propagation from the singleton clustering."""
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    if rng is None:
        rng = np.random.default_rng(0)
    block = None
    if constraint is not None and constraint.block is not None:
        block = constraint.block.tolist()
    assignment = list(range(g.n))
    cut = _lp_sweeps(g, assignment, rounds, block, rng, g.total_weight)
    return Clustering(np.array(assignment, dtype=np.int64), cut)


def build_hierarchy(
    g: SignedGraph,
    constraint: Optional[Constraint] = None,
    rng: Optional[np.random.Generator] = None,
    rounds: int = DEFAULT_LP_ROUNDS,
    first_level_only: bool = False,
) -> Hierarchy:
    """Coarsen until label propagation finds nothing left to merge.

    Under a constraint the blocked cut edges can never contract, so the
    coarsest graph is at most as coarse as the quotient graph of the
    constraining partition. With ``first_level_only`` the constraint guides
    only the first clustering step and is dropped afterwards.
    """
    if rng is None:
        rng = np.random.default_rng(0)
    block = constraint.block if constraint is not None else None
    graphs = [g]
    maps: List[np.ndarray] = []
    while True:
        current = graphs[-1]
        assignment = list(range(current.n))
        cut = _lp_sweeps(
            current,
            assignment,
            rounds,
            block.tolist() if block is not None else None,
            rng,
            current.total_weight,
        )
        c = Clustering(np.array(assignment, dtype=np.int64), cut)
        if c.k == current.n:
            break
        coarse, mapping = contract(current, c)
        graphs.append(coarse)
        maps.append(mapping)
        if first_level_only:
            block = None
        elif block is not None:
            propagated = np.empty(coarse.n, dtype=np.int64)
            propagated[mapping] = block
            block = propagated
    return Hierarchy(graphs, maps)
