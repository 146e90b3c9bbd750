"""Coarse-grained parallel search: independent islands with best-individual
migration.

Each island runs the full memetic loop on the shared immutable graph with
its own derived seed and population. After every round an island pushes a
snapshot of its local best to the mailbox of one randomly chosen peer it
has not yet told about this particular best (the recipient set resets when
the best changes or everyone has been covered), then drains its own mailbox
and feeds received individuals through the ordinary replacement rule,
revalidating their fitness on arrival. There is no global synchronization;
islands stop on their own deadlines and the best incumbent across the
survivors wins.
"""

from __future__ import annotations

import logging
import os
import queue
import threading
from typing import Callable, List, Optional

import numpy as np

from .clustering import Clustering
from .graph import SignedGraph
from .memetic import EvoConfig, Individual, evolve

__all__ = ["run_islands"]

logger = logging.getLogger(__name__)


def _make_comm(i: int, mailboxes, rng: np.random.Generator):
    others = [j for j in range(len(mailboxes)) if j != i]
    state = {"best": None, "sent": set()}

    def send(best: Individual) -> None:
        if not others:
            return
        key = (best.fitness, best.clustering.assignment.tobytes())
        if key != state["best"]:
            state["best"] = key
            state["sent"].clear()
        fresh = [j for j in others if j not in state["sent"]]
        if not fresh:
            state["sent"].clear()
            fresh = others
        j = fresh[int(rng.integers(len(fresh)))]
        state["sent"].add(j)
        mailboxes[j].put(np.array(best.clustering.assignment))

    def drain():
        items = []
        while True:
            try:
                items.append(mailboxes[i].get_nowait())
            except queue.Empty:
                break
        return items

    return send, drain


def run_islands(
    g: SignedGraph,
    cfg: EvoConfig,
    islands: Optional[int] = None,
    seed: int = 0,
    progress: Optional[Callable[[str], None]] = None,
) -> Clustering:
    """Run ``islands`` concurrent memetic searches and return the best result.

    With one island this is exactly :func:`signedclust.memetic.evolve`.
    Workers are threads inside this process sharing the read-only graph;
    mailboxes are unbounded queues and receives never block. A crashed
    island is reported and the remaining islands' results are used.
    """
    p = islands if islands is not None else (os.cpu_count() or 1)
    if p < 1:
        raise ValueError("need at least one island")
    if p == 1:
        return evolve(g, cfg, seed, progress=progress)
    ss = np.random.SeedSequence(seed)
    island_seeds = ss.spawn(p)
    comm_seeds = ss.spawn(p)

    mailboxes = [queue.SimpleQueue() for _ in range(p)]
    results: List[Optional[Clustering]] = [None] * p
    failures: List[Optional[BaseException]] = [None] * p

    def worker(i: int) -> None:
        try:
            comm = _make_comm(i, mailboxes, np.random.default_rng(comm_seeds[i]))
            results[i] = evolve(
                g, cfg, island_seeds[i], progress=progress, _comm=comm, _island=i
            )
        except BaseException as exc:  # noqa: BLE001 - isolate island failures
            failures[i] = exc

    threads = [
        threading.Thread(target=worker, args=(i,), name=f"island-{i}") for i in range(p)
    ]
    for t in threads:
        t.start()
    for t in threads:
        t.join()

    for i, exc in enumerate(failures):
        if exc is not None:
            logger.error("island %d failed: %r", i, exc)
    survivors = [r for r in results if r is not None]
    if not survivors:
        raise RuntimeError("all islands failed") from next(e for e in failures if e)
    return min(survivors, key=lambda c: c.cut)
