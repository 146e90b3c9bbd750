"""The memetic layer: population, recombination, mutation, replacement.

Recombination blocks the cut edges of both parents during coarsening, so
the offspring starts from the better parent's structure and can only
improve on it. Mutation blocks one reference's cut edges in the first
level only, trading the guarantee for variability. A short evolution run
prints its incumbent trace.
"""

import numpy as np

from signedclust import (
    Clustering,
    EvoConfig,
    Individual,
    evolve,
    generate_planted,
    mutate,
    recombine,
    scml,
)

g, _ = generate_planted(k=5, size=30, p_in=0.25, p_out=0.06, noise=0.05, seed=3)
print(g, "lower bound", g.sum_neg)

# hand-rolled parents from two seeded solver runs
a = Individual.from_clustering(g, scml(g, seed=1))
b = Individual.from_clustering(g, scml(g, seed=2))
child = recombine(g, a, b, rng=np.random.default_rng(0))
print(f"parents {a.fitness:g} / {b.fitness:g} -> offspring {child.fitness:g}")
assert child.fitness <= min(a.fitness, b.fitness)

m = mutate(g, a, rng=np.random.default_rng(1))
print(f"mutation of the first parent: {m.fitness:g} (no guarantee, more diversity)")

# a three-second evolution; the trace shows every incumbent improvement
print("\nevolve for 3 seconds:")
best = evolve(
    g,
    EvoConfig(time_limit=3.0),
    seed=7,
    progress=lambda line: print("  " + line),
)
print(f"final cut {best.cut:g} with {best.k} clusters")
