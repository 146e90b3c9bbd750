"""Verification backbone: greedy agglomeration, exact brute force, planted instances.

The greedy baseline merges the cluster pair with the largest positive summed
interaction until only non-positive interactions remain. The brute-force
solver enumerates set partitions (restricted growth strings) with incremental
cut updates and a remaining-negative-mass bound, exact up to n = 12. The
planted generator produces ground-truth instances whose noise-free optimum
meets the negative-weight lower bound by construction.
"""

from __future__ import annotations

import heapq
from typing import Optional, Tuple

import numpy as np

from .clustering import Clustering
from .graph import SignedGraph

__all__ = ["gaec", "brute_force_optimal", "generate_planted", "BRUTE_FORCE_MAX_N"]

BRUTE_FORCE_MAX_N = 12


def gaec(g: SignedGraph) -> Clustering:
    """Greedy additive edge contraction.

    Starting from singletons, repeatedly merge the cluster pair whose summed
    shared edge weight is largest while that maximum is strictly positive,
    accumulating parallel interactions after each merge. Ties go to the
    lexicographically smallest cluster-id pair. Stale heap entries are
    skipped by validating against the current interaction table.
    """
    n = g.n
    inter = [dict() for _ in range(n)]  # cluster-level adjacency among alive roots
    table = {}
    heap = []
    for u, v, w in zip(g.edges_u.tolist(), g.edges_v.tolist(), g.edges_w.tolist()):
        inter[u][v] = w
        inter[v][u] = w
        table[(u, v)] = w
        if w > 0:
            heap.append((-w, u, v))
    heapq.heapify(heap)
    alive = [True] * n
    members = [[v] for v in range(n)]

    while heap:
        nw, a, b = heapq.heappop(heap)
        w = -nw
        if not (alive[a] and alive[b]) or table.get((a, b)) != w:
            continue
        if w <= 0:
            break
        # absorb b into a (a < b by key construction)
        alive[b] = False
        members[a].extend(members[b])
        members[b] = []
        del table[(a, b)]
        del inter[a][b]
        for x, wx in list(inter[b].items()):
            if x == a:
                continue
            del inter[x][b]
            kx = (b, x) if b < x else (x, b)
            del table[kx]
            new = inter[a].get(x, 0.0) + wx
            ka = (a, x) if a < x else (x, a)
            if new == 0.0:
                inter[a].pop(x, None)
                inter[x].pop(a, None)
                table.pop(ka, None)
            else:
                inter[a][x] = new
                inter[x][a] = new
                table[ka] = new
                if new > 0:
                    heapq.heappush(heap, (-new, ka[0], ka[1]))
        inter[b] = {}

    assignment = np.empty(n, dtype=np.int64)
    for root in range(n):
        for v in members[root]:
            assignment[v] = root
    return Clustering.from_assignment(g, assignment)


def brute_force_optimal(g: SignedGraph) -> Tuple[Clustering, float]:
    """Exact minimum edge-cut by set-partition enumeration.

    Walks restricted growth strings depth first, updating the cut
    incrementally and pruning branches whose cut plus the still-undecided
    negative mass cannot beat the best found. Refuses n > 12
    (Bell(12) is about 4.2 million partitions).
    """
    n = g.n
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {n}")
    if n == 0:
        return Clustering(np.empty(0, dtype=np.int64), 0.0), 0.0

    back = [[] for _ in range(n)]  # for node v: (u, w) with u < v
    for u, v, w in zip(g.edges_u.tolist(), g.edges_v.tolist(), g.edges_w.tolist()):
        back[v].append((u, w))
    # negative weight still undecided once nodes 0..i-1 are placed
    neg_rem = [0.0] * (n + 1)
    for i in range(n - 1, -1, -1):
        neg_rem[i] = neg_rem[i + 1] + sum(w for _, w in back[i] if w < 0)

    best_cut = np.inf
    best = None
    a = [0] * n

    def walk(i: int, used: int, cut: float) -> None:
        nonlocal best_cut, best
        if cut + neg_rem[i] >= best_cut:
            return
        if i == n:
            best_cut = cut
            best = a.copy()
            return
        wt = [0.0] * used
        total = 0.0
        for u, w in back[i]:
            wt[a[u]] += w
            total += w
        for c in range(used):
            a[i] = c
            walk(i + 1, used, cut + total - wt[c])
        a[i] = used
        walk(i + 1, used + 1, cut + total)

    walk(0, 0, 0.0)
    assignment = np.array(best, dtype=np.int64)
    return Clustering(assignment, float(best_cut)), float(best_cut)


def generate_planted(
    k: int,
    size: int,
    p_in: float = 0.5,
    p_out: float = 0.2,
    noise: float = 0.0,
    seed: Optional[int] = 0,
) -> Tuple[SignedGraph, np.ndarray]:
    """Random instance with k planted clusters of ``size`` nodes each.

    Intra-cluster pairs get a +1 edge with probability ``p_in``,
    inter-cluster pairs a -1 edge with probability ``p_out``; each drawn
    edge's sign then flips with probability ``noise``. Returns the graph and
    the ground-truth assignment. With noise 0 the ground truth cuts exactly
    the negative edges, i.e. it attains the lower bound.
    """
    for name, p in (("p_in", p_in), ("p_out", p_out), ("noise", noise)):
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"{name} must be in [0, 1]")
    if k < 1 or size < 1:
        raise ValueError("k and size must be positive")
    n = k * size
    truth = np.repeat(np.arange(k, dtype=np.int64), size)
    rng = np.random.default_rng(seed)
    iu, iv = np.triu_indices(n, k=1)
    same = truth[iu] == truth[iv]
    keep = rng.random(iu.size) < np.where(same, p_in, p_out)
    iu, iv, same = iu[keep], iv[keep], same[keep]
    w = np.where(same, 1.0, -1.0)
    flip = rng.random(iu.size) < noise
    w = np.where(flip, -w, w)
    if iu.size == 0:
        raise ValueError("parameters produced an empty edge set")
    return SignedGraph(n, iu, iv, w), truth
