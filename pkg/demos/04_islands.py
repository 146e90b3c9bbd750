"""Island parallelism: concurrent populations trading their best finds.

Each island runs the full memetic loop with its own seed; after every
round it pushes its best clustering to one peer it has not yet told (a
randomized rumor-spreading push) and absorbs whatever landed in its own
mailbox through the usual replacement rule. No global synchronization:
each island watches the shared deadline on its own.
"""

from signedclust import EvoConfig, edge_cut, generate_planted, run_islands

g, _ = generate_planted(k=6, size=40, p_in=0.2, p_out=0.05, noise=0.05, seed=21)
print(g, "lower bound", g.sum_neg)

cfg = EvoConfig(time_limit=4.0)
best = run_islands(
    g,
    cfg,
    islands=3,
    seed=13,
    progress=lambda line: print("  " + line),
)
print(f"\ncross-island best: cut {best.cut:g} (k={best.k})")
assert best.cut == edge_cut(g, best.assignment)  # receivers revalidate
