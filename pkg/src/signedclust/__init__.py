"""Minimum edge-cut clustering of signed graphs.

Multilevel solver (label-propagation coarsening, FM refinement, global
search), a memetic engine with edge-blocking recombination and island
parallelism, plus greedy and exact baselines for verification.
"""

from .graph import SignedGraph, contract, normalize
from .io import (
    EdgeListFormatError,
    EdgeRecord,
    load_edge_list,
    load_graph,
    write_clustering,
    write_edge_list,
)
from .clustering import (
    Clustering,
    cut_edges,
    edge_cut,
    project_to_finer,
    symmetric_difference,
    z_value,
)
from .coarsening import Constraint, Hierarchy, build_hierarchy, label_propagation_cluster
from .refinement import fm_refine, gain, lp_refine
from .multilevel import MultilevelConfig, global_search, multilevel_once, scml
from .memetic import (
    EvoConfig,
    Individual,
    Population,
    choose_alpha,
    evolve,
    init_population,
    mutate,
    recombine,
    replace,
    tournament_select,
)
from .islands import run_islands
from .baselines import brute_force_optimal, gaec, generate_planted

__version__ = "0.1.0"

__all__ = [
    "SignedGraph",
    "contract",
    "normalize",
    "EdgeRecord",
    "EdgeListFormatError",
    "load_edge_list",
    "load_graph",
    "write_clustering",
    "write_edge_list",
    "Clustering",
    "edge_cut",
    "z_value",
    "cut_edges",
    "symmetric_difference",
    "project_to_finer",
    "Constraint",
    "Hierarchy",
    "label_propagation_cluster",
    "build_hierarchy",
    "gain",
    "lp_refine",
    "fm_refine",
    "MultilevelConfig",
    "multilevel_once",
    "global_search",
    "scml",
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
    "run_islands",
    "gaec",
    "brute_force_optimal",
    "generate_planted",
    "__version__",
]
