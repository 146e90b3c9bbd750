"""The multilevel solver: coarsen, refine while uncoarsening, global search.

One cycle builds the contraction hierarchy, seeds the coarsest graph with
the singleton clustering (there is no separate initial-solution algorithm:
coarsening itself is the construction), then walks back up the hierarchy
projecting and refining at every level. The full solver runs a second
cycle, the *global search*, whose coarsening is constrained so the first
cycle's clustering survives to the coarsest level as the initial solution
and can only be improved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .clustering import Clustering, edge_cut, project_to_finer
from .coarsening import Constraint, build_hierarchy, DEFAULT_LP_ROUNDS
from .graph import SignedGraph
from .refinement import fm_refine, lp_refine, DEFAULT_STALL_LIMIT

__all__ = ["MultilevelConfig", "multilevel_once", "global_search", "scml"]


@dataclass(frozen=True)
class MultilevelConfig:
    lp_rounds: int = DEFAULT_LP_ROUNDS
    fm_stall_limit: int = DEFAULT_STALL_LIMIT


def _refine(g: SignedGraph, c: Clustering, cfg: MultilevelConfig, rng) -> Clustering:
    c = lp_refine(g, c, cfg.lp_rounds, rng)
    return fm_refine(g, c, cfg.fm_stall_limit)


def _image_on_coarsest(
    coarsest: SignedGraph, composed_map: np.ndarray, fine: Clustering
) -> Clustering:
    """Project a level-0 clustering forward onto the coarsest graph.

    Meaningful whenever coarsening was constrained so that each coarse
    node's constituents share one cluster of ``fine``; the image's cut then
    equals ``fine.cut`` exactly. It is recomputed on the coarse graph
    rather than trusted.
    """
    nfine = composed_map.shape[0]
    rep = np.full(coarsest.n, nfine, dtype=np.int64)
    np.minimum.at(rep, composed_map, np.arange(nfine))
    image = fine.assignment[rep]
    return Clustering(image, edge_cut(coarsest, image))


def multilevel_once(
    g: SignedGraph,
    cfg: Optional[MultilevelConfig] = None,
    rng: Optional[np.random.Generator] = None,
    constraint: Optional[Constraint] = None,
    first_level_only: bool = False,
    candidates: Optional[Sequence[Clustering]] = None,
    singleton_candidate: bool = True,
) -> Clustering:
    """One coarsen/uncoarsen cycle.

    ``candidates`` are level-0 clusterings whose images compete with the
    all-singleton clustering (unless ``singleton_candidate`` is off) as the
    initial solution on the coarsest graph; the minimum-cut option wins.
    Refinement runs at every level from the coarsest down, so the returned
    cut is never above the initial solution's.
    """
    cfg = cfg or MultilevelConfig()
    if rng is None:
        rng = np.random.default_rng(0)
    h = build_hierarchy(g, constraint, rng, cfg.lp_rounds, first_level_only)
    coarsest = h.coarsest

    best: Optional[Clustering] = None
    if candidates:
        comp = h.composed_map()
        for cand in candidates:
            image = _image_on_coarsest(coarsest, comp, cand)
            if best is None or image.cut < best.cut:
                best = image
    if singleton_candidate or best is None:
        singles = Clustering.singletons(coarsest)
        if best is None or singles.cut <= best.cut:
            best = singles

    c = _refine(coarsest, best, cfg, rng)
    for level in range(len(h.maps) - 1, -1, -1):
        c = project_to_finer(c, h.maps[level])
        c = _refine(h.graphs[level], c, cfg, rng)
    return c


def global_search(
    g: SignedGraph,
    start: Clustering,
    cfg: Optional[MultilevelConfig] = None,
    rng: Optional[np.random.Generator] = None,
) -> Clustering:
    """Second multilevel cycle forced to begin from ``start``.

    Coarsening is constrained so every cut edge of ``start`` survives to
    the coarsest graph, where ``start``'s image becomes the initial
    solution; refinement can then only lower the cut, so the result is
    never worse than ``start``.
    """
    out = multilevel_once(
        g,
        cfg,
        rng,
        constraint=Constraint.subset_of(start),
        candidates=[start],
        singleton_candidate=False,
    )
    # refinement is monotone and the image is exact, but keep the contract
    # explicit: never hand back something worse than the start
    return out if out.cut <= start.cut else start


def scml(
    g: SignedGraph,
    cfg: Optional[MultilevelConfig] = None,
    seed: Optional[int] = 0,
    rng: Optional[np.random.Generator] = None,
    first_cycle_constraint: Optional[Constraint] = None,
    first_level_only: bool = False,
    coarsest_candidates: Optional[Sequence[Clustering]] = None,
) -> Clustering:
    """Full solver: one multilevel cycle followed by global search.

    The constraint hooks steer only the first cycle; they are how the
    memetic operators reuse this routine. Identical (graph, cfg, seed)
    produce an identical clustering.
    """
    cfg = cfg or MultilevelConfig()
    if rng is None:
        rng = np.random.default_rng(seed)
    c = multilevel_once(
        g,
        cfg,
        rng,
        constraint=first_cycle_constraint,
        first_level_only=first_level_only,
        candidates=coarsest_candidates,
    )
    return global_search(g, c, cfg, rng)
