"""Cross-checking the solvers against the greedy baseline and exact optima.

The greedy baseline agglomerates the most attractive cluster pair until
only repulsion remains. The brute-force oracle enumerates every partition
(fine up to a dozen nodes) and anchors all the quality claims.
"""

import numpy as np

from signedclust import SignedGraph, brute_force_optimal, gaec, scml

rng = np.random.default_rng(99)

header = f"{'n':>3} {'optimum':>8} {'greedy':>8} {'multilevel':>11}"
print(header + "\n" + "-" * len(header))
greedy_gap = solver_gap = 0.0
for trial in range(12):
    n = int(rng.integers(5, 11))
    edges = [
        (u, v, 1.0 if rng.random() < 0.5 else -1.0)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < 0.5
    ]
    g = SignedGraph.from_edges(n, edges)
    _, opt = brute_force_optimal(g)
    greedy = gaec(g).cut
    ml = scml(g, seed=trial).cut
    greedy_gap += greedy - opt
    solver_gap += ml - opt
    print(f"{n:>3} {opt:>8g} {greedy:>8g} {ml:>11g}")

print(f"\ntotal gap to optimum: greedy {greedy_gap:g}, multilevel {solver_gap:g}")
