"""Command-line entry points.

``cluster`` runs one of the four algorithms on an edge-list instance and
writes the clustering plus a metrics JSON record. ``--repeat R`` sweeps
seeds seed..seed+R-1 and summarizes them with the minimum cut and the
negated geometric mean of the absolute cuts. ``gen-planted`` emits a
synthetic ground-truth instance; ``convert-graph`` normalizes an arbitrary
edge list into canonical form. Progress lines (one per incumbent
improvement, ``t=<sec> best_cut=<val>``) go to stderr so stdout stays
parseable.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__
from .baselines import brute_force_optimal, gaec, generate_planted
from .clustering import Clustering
from .graph import SignedGraph
from .io import dump_metrics, load_graph, metrics_record, write_clustering, write_edge_list
from .islands import run_islands
from .memetic import EvoConfig
from .multilevel import MultilevelConfig, scml

ALGORITHMS = ("scml", "evo", "gaec", "brute")


def _progress_printer(line: str) -> None:
    print(line, file=sys.stderr, flush=True)


def _run_once(g: SignedGraph, args, seed: int) -> tuple[Clustering, float]:
    mlcfg = MultilevelConfig(args.lp_rounds, args.fm_stall_limit)
    t0 = time.perf_counter()
    if args.algo == "scml":
        c = scml(g, mlcfg, seed=seed)
    elif args.algo == "gaec":
        c = gaec(g)
    elif args.algo == "brute":
        c, _ = brute_force_optimal(g)
    else:
        cfg = EvoConfig(
            time_limit=args.time_limit,
            beta=args.beta,
            lp_rounds=args.lp_rounds,
            fm_stall_limit=args.fm_stall_limit,
        )
        c = run_islands(
            g, cfg, islands=args.islands, seed=seed, progress=_progress_printer
        )
    return c, time.perf_counter() - t0


def _geometric_mean_cut(cuts) -> float:
    # negative-cut convention: geometric mean of absolute values, negated
    vals = [abs(c) for c in cuts]
    if any(v == 0 for v in vals):
        return 0.0
    return -math.exp(sum(math.log(v) for v in vals) / len(vals))


def main(argv: Optional[list] = None) -> int:
    ap = argparse.ArgumentParser(
        prog="cluster",
        description="Minimize the edge-cut of a signed graph clustering.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("--algo", choices=ALGORITHMS, required=True)
    ap.add_argument("--input", required=True, help="edge list file (u v w per line)")
    ap.add_argument("--output", help="clustering file to write")
    ap.add_argument("--metrics", help="metrics JSON file (default: stdout)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=1, metavar="R",
                    help="run seeds seed..seed+R-1 and summarize")
    ap.add_argument("--repeat-parallel", action="store_true",
                    help="fan repeated runs out across worker threads")
    ap.add_argument("--time-limit", type=float, default=10.0,
                    help="evo wall-clock budget in seconds")
    ap.add_argument("--islands", type=int, default=None,
                    help="evo island count (default: logical cores)")
    ap.add_argument("--beta", type=float, default=0.10, help="evo mutation probability")
    ap.add_argument("--lp-rounds", type=int, default=10)
    ap.add_argument("--fm-stall-limit", type=int, default=15)
    ap.add_argument("--raw-weights", action="store_true",
                    help="keep summed real weights instead of quantizing to +/-1")
    args = ap.parse_args(argv)

    try:
        g = load_graph(args.input, raw_weights=args.raw_weights)
    except (OSError, ValueError) as exc:
        print(f"cluster: {exc}", file=sys.stderr)
        return 1
    instance = Path(args.input).stem

    try:
        if args.repeat < 1:
            raise ValueError("--repeat must be >= 1")
        seeds = [args.seed + i for i in range(args.repeat)]
        if args.repeat_parallel and len(seeds) > 1:
            with ThreadPoolExecutor() as pool:
                outcomes = list(pool.map(lambda s: _run_once(g, args, s), seeds))
        else:
            outcomes = [_run_once(g, args, s) for s in seeds]
    except ValueError as exc:
        print(f"cluster: {exc}", file=sys.stderr)
        return 1

    records = [
        metrics_record(instance, args.algo, s, g, c.assignment, c.cut, dt)
        for s, (c, dt) in zip(seeds, outcomes)
    ]
    best_i = min(range(len(seeds)), key=lambda i: (outcomes[i][0].cut, i))
    best_c = outcomes[best_i][0]

    if args.repeat == 1:
        payload = records[0]
    else:
        payload = {
            "instance": instance,
            "algorithm": args.algo,
            "runs": records,
            "min_edge_cut": min(r["edge_cut"] for r in records),
            "geometric_mean_edge_cut": _geometric_mean_cut(
                r["edge_cut"] for r in records
            ),
        }

    if args.output:
        write_clustering(args.output, g, best_c.assignment, best_c.cut, seeds[best_i])
    if args.metrics:
        dump_metrics(payload, args.metrics)
    else:
        json.dump(payload, sys.stdout, indent=2)
        print()
    return 0


def gen_planted_main(argv: Optional[list] = None) -> int:
    ap = argparse.ArgumentParser(
        prog="gen-planted",
        description="Generate a planted-partition signed graph instance.",
    )
    ap.add_argument("--k", type=int, required=True, help="number of planted clusters")
    ap.add_argument("--size", type=int, required=True, help="nodes per cluster")
    ap.add_argument("--p-in", type=float, default=0.5)
    ap.add_argument("--p-out", type=float, default=0.2)
    ap.add_argument("--noise", type=float, default=0.0)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--output", required=True, help="edge list file to write")
    args = ap.parse_args(argv)
    try:
        g, truth = generate_planted(
            args.k, args.size, args.p_in, args.p_out, args.noise, args.seed
        )
    except ValueError as exc:
        print(f"gen-planted: {exc}", file=sys.stderr)
        return 1
    write_edge_list(g, args.output)
    from .clustering import edge_cut

    write_clustering(
        str(args.output) + ".truth", g, truth, edge_cut(g, truth), args.seed
    )
    print(
        f"wrote {args.output} (n={g.n} m={g.m} m+={g.m_plus} m-={g.m_minus} "
        f"sum_neg={g.sum_neg:g}) and ground truth sidecar"
    )
    return 0


def convert_main(argv: Optional[list] = None) -> int:
    ap = argparse.ArgumentParser(
        prog="convert-graph",
        description="Normalize an edge list to canonical signed-graph form.",
    )
    ap.add_argument("--input", required=True)
    ap.add_argument("--output", required=True)
    ap.add_argument("--raw-weights", action="store_true")
    ap.add_argument("--format", choices=("auto", "snap", "konect", "metis-like"),
                    default="auto")
    args = ap.parse_args(argv)
    try:
        g = load_graph(args.input, raw_weights=args.raw_weights, fmt=args.format)
    except (OSError, ValueError) as exc:
        print(f"convert-graph: {exc}", file=sys.stderr)
        return 1
    write_edge_list(g, args.output)
    print(f"wrote {args.output}: {g!r}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
