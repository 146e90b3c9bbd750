"""Steady-state memetic search on top of the multilevel solver.

Individuals are clusterings represented alongside their cut-edge sets;
fitness is the edge-cut. Each round produces exactly one offspring, by
recombination (blocking both parents' cut edges from contraction, so the
offspring is never worse than either parent) or, with small probability, by
mutation (blocking one reference's cut edges in the first level only, which
may worsen the cut but adds variability). Replacement evicts the member
most similar to the newcomer, keeping the population diverse. The best
clustering ever seen is tracked outside the population, so eviction can
never lose the answer.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple, Union

import numpy as np

from .clustering import Clustering, cut_edges
from .coarsening import Constraint
from .graph import SignedGraph
from .multilevel import MultilevelConfig, scml

__all__ = [
    "EvoConfig",
    "Individual",
    "Population",
    "choose_alpha",
    "init_population",
    "tournament_select",
    "recombine",
    "mutate",
    "replace",
    "evolve",
]

logger = logging.getLogger(__name__)

ALPHA_MIN = 3
ALPHA_MAX = 100

Progress = Optional[Callable[[str], None]]


@dataclass(frozen=True)
class EvoConfig:
    """Knobs of the evolutionary loop.

    ``time_limit`` is the wall-clock budget in seconds; a round in flight
    when it expires still completes. ``alpha`` pins the population capacity,
    otherwise it is sized so that building the initial population costs
    roughly ``alpha_time_fraction`` of the budget (capped at
    ``init_budget_fraction`` of it, whatever happens).
    """

    time_limit: float = 60.0
    beta: float = 0.10
    alpha: Optional[int] = None
    alpha_time_fraction: float = 0.10
    init_budget_fraction: float = 0.5
    lp_rounds: int = 10
    fm_stall_limit: int = 15
    stop_at_bound: bool = True
    max_rounds: Optional[int] = None

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError("beta must lie in [0, 1]")
        if self.time_limit <= 0:
            raise ValueError("time_limit must be positive")

    def multilevel(self) -> MultilevelConfig:
        return MultilevelConfig(self.lp_rounds, self.fm_stall_limit)


@dataclass(eq=False)
class Individual:
    """A clustering, its cut-edge set and its fitness (the edge-cut).

    The edge set is always derived from the concrete clustering, so set
    feasibility never needs checking. ``birth`` is the insertion stamp used
    for replacement tie-breaking.
    """

    clustering: Clustering
    cut_set: frozenset
    birth: int = 0

    @property
    def fitness(self) -> float:
        return self.clustering.cut

    @classmethod
    def from_clustering(cls, g: SignedGraph, c: Clustering) -> "Individual":
        return cls(c, frozenset(cut_edges(g, c)))

    @classmethod
    def from_assignment(cls, g: SignedGraph, assignment: np.ndarray) -> "Individual":
        """Rebuild from a bare assignment, revalidating the fitness."""
        c = Clustering.from_assignment(g, assignment)
        return cls(c, frozenset(cut_edges(g, c)))


class Population:
    """Bounded multiset of individuals."""

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.capacity = capacity
        self.members: List[Individual] = []
        self._births = 0

    def __len__(self) -> int:
        return len(self.members)

    def add(self, ind: Individual) -> None:
        if len(self.members) >= self.capacity:
            raise ValueError("population already at capacity; use replace()")
        ind.birth = self._births
        self._births += 1
        self.members.append(ind)

    def best(self) -> Individual:
        return min(self.members, key=lambda m: (m.fitness, m.birth))


def choose_alpha(
    t_single: float,
    t_total: float,
    fraction: float = 0.10,
    lo: int = ALPHA_MIN,
    hi: int = ALPHA_MAX,
) -> int:
    """Population size whose construction costs about ``fraction`` of the budget."""
    t_single = max(t_single, 1e-9)
    return int(min(max(round(fraction * t_total / t_single), lo), hi))


def tournament_select(p: Population, rng: np.random.Generator) -> Tuple[Individual, Individual]:
    """Two size-2 tournaments; the loser of the second steps in if both are
    won by the same individual, so the parents are always distinct."""
    m = len(p.members)
    if m < 2:
        raise ValueError("tournament selection needs at least two individuals")
    fit = [ind.fitness for ind in p.members]

    def tourney():
        i = int(rng.integers(m))
        j = int(rng.integers(m - 1))
        if j >= i:
            j += 1
        return (i, j) if fit[i] <= fit[j] else (j, i)

    w1, _ = tourney()
    w2, l2 = tourney()
    second = l2 if w2 == w1 else w2
    return p.members[w1], p.members[second]


def recombine(
    g: SignedGraph,
    a: Individual,
    b: Individual,
    cfg: Union[EvoConfig, MultilevelConfig, None] = None,
    rng: Optional[np.random.Generator] = None,
) -> Individual:
    """Offspring of two parents via edge-blocked multilevel clustering.

    Both parents' cut edges are blocked from contraction throughout the
    first cycle; the coarsest initial solution is the best of the parents'
    images and the all-singleton clustering, so the offspring's fitness
    never exceeds the better parent's.
    """
    mlcfg = cfg.multilevel() if isinstance(cfg, EvoConfig) else cfg
    constraint = Constraint.subset_of_two(g, a.clustering, b.clustering)
    child = scml(
        g,
        mlcfg,
        rng=rng,
        first_cycle_constraint=constraint,
        coarsest_candidates=[a.clustering, b.clustering],
    )
    return Individual.from_clustering(g, child)


def mutate(
    g: SignedGraph,
    a: Individual,
    cfg: Union[EvoConfig, MultilevelConfig, None] = None,
    rng: Optional[np.random.Generator] = None,
) -> Individual:
    """Fresh multilevel run that blocks ``a``'s cut edges only in the first
    level, inheriting some of its structure without any fitness guarantee."""
    mlcfg = cfg.multilevel() if isinstance(cfg, EvoConfig) else cfg
    child = scml(
        g,
        mlcfg,
        rng=rng,
        first_cycle_constraint=Constraint.subset_of(a.clustering),
        first_level_only=True,
    )
    return Individual.from_clustering(g, child)


def replace(p: Population, c: Individual) -> None:
    """Insert ``c`` unless it is strictly worse than every member; evict the
    member with the smallest cut-set symmetric difference to ``c`` (ties:
    worse fitness first, then older)."""
    if len(p.members) < p.capacity:
        p.add(c)
        return
    if c.fitness > max(m.fitness for m in p.members):
        return
    key = min(
        range(len(p.members)),
        key=lambda i: (
            len(p.members[i].cut_set ^ c.cut_set),
            -p.members[i].fitness,
            p.members[i].birth,
        ),
    )
    c.birth = p._births
    p._births += 1
    p.members[key] = c


def init_population(
    g: SignedGraph,
    cfg: EvoConfig,
    seed_seq: Optional[np.random.SeedSequence] = None,
    start_time: Optional[float] = None,
    progress: Progress = None,
    island: Optional[int] = None,
) -> Population:
    """Build the initial population from independent multilevel runs.

    The first run is timed to size the population. If the initialization
    budget runs out early the population simply starts smaller (never empty);
    below three individuals a warning is logged.
    """
    if seed_seq is None:
        seed_seq = np.random.SeedSequence(0)
    if start_time is None:
        start_time = time.perf_counter()
    mlcfg = cfg.multilevel()
    budget = cfg.time_limit * cfg.init_budget_fraction

    t0 = time.perf_counter()
    first = scml(g, mlcfg, rng=np.random.default_rng(seed_seq.spawn(1)[0]))
    t_single = time.perf_counter() - t0
    alpha = cfg.alpha or choose_alpha(
        t_single, cfg.time_limit, cfg.alpha_time_fraction
    )
    pop = Population(capacity=alpha)
    pop.add(Individual.from_clustering(g, first))
    _report(progress, start_time, first.cut, island)
    best_seen = first.cut
    at_bound = False
    while len(pop) < alpha:
        if cfg.stop_at_bound and best_seen == g.sum_neg:
            at_bound = True  # provably optimal already; no point building more
            break
        if time.perf_counter() - start_time >= budget:
            break
        c = scml(g, mlcfg, rng=np.random.default_rng(seed_seq.spawn(1)[0]))
        pop.add(Individual.from_clustering(g, c))
        if c.cut < best_seen:
            best_seen = c.cut
            _report(progress, start_time, best_seen, island)
    if len(pop) < ALPHA_MIN and not at_bound:
        logger.warning(
            "initialization budget allowed only %d individual(s) (alpha=%d)",
            len(pop),
            alpha,
        )
    return pop


def _report(progress: Progress, start_time: float, cut: float, island: Optional[int] = None):
    if progress is None:
        return
    t = time.perf_counter() - start_time
    line = f"t={t:.3f} best_cut={cut:g}"
    if island is not None:
        line += f" island={island}"
    progress(line)


def evolve(
    g: SignedGraph,
    cfg: EvoConfig,
    seed: Union[int, np.random.SeedSequence, None] = 0,
    progress: Progress = None,
    _comm=None,
    _island: Optional[int] = None,
) -> Clustering:
    """Run the steady-state loop until the time limit and return the best
    clustering ever seen.

    All randomness derives from ``seed`` through a splitting sequence: the
    round RNG and every offspring's solver RNG get independent streams, so
    reruns are reproducible. When the incumbent provably reaches the
    negative-weight lower bound the loop exits early (nothing below it
    exists). ``_comm`` is the island migration hook pair (send, drain).
    """
    start = time.perf_counter()
    ss = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    loop_rng = np.random.default_rng(ss.spawn(1)[0])
    pop = init_population(g, cfg, ss, start, progress=progress, island=_island)

    incumbent = pop.best()
    send, drain = _comm if _comm is not None else (None, None)
    rounds = 0
    while True:
        if cfg.stop_at_bound and incumbent.fitness == g.sum_neg:
            break
        if time.perf_counter() - start >= cfg.time_limit:
            break
        if cfg.max_rounds is not None and rounds >= cfg.max_rounds:
            break
        child_rng = np.random.default_rng(ss.spawn(1)[0])
        if loop_rng.random() > cfg.beta and len(pop) >= 2:
            a, b = tournament_select(pop, loop_rng)
            child = recombine(g, a, b, cfg.multilevel(), child_rng)
        else:
            ref = pop.members[int(loop_rng.integers(len(pop)))]
            child = mutate(g, ref, cfg.multilevel(), child_rng)
        replace(pop, child)
        if child.fitness < incumbent.fitness:
            incumbent = child
            _report(progress, start, incumbent.fitness, _island)
        if send is not None:
            send(pop.best())
            for assignment in drain():
                received = Individual.from_assignment(g, assignment)
                replace(pop, received)
                if received.fitness < incumbent.fitness:
                    incumbent = received
                    _report(progress, start, incumbent.fitness, _island)
        rounds += 1
    return incumbent.clustering
