"""Edge-list ingestion and result output.

Reads the whitespace-separated ``u v w`` edge lists used by the public
signed-graph collections (comment lines start with ``#`` or ``%``; some
exports use commas and trailing timestamp columns, both tolerated) and
writes canonical normalized instances, clustering files and metrics JSON.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import IO, List, NamedTuple, Optional, Tuple, Union

import numpy as np

from .graph import SignedGraph, normalize

__all__ = [
    "EdgeRecord",
    "EdgeListFormatError",
    "load_edge_list",
    "load_graph",
    "write_edge_list",
    "write_clustering",
    "metrics_record",
]

Source = Union[str, Path, IO[str]]


class EdgeRecord(NamedTuple):
    """One raw input arc, before merging/normalization."""

    u: int
    v: int
    w: float


class EdgeListFormatError(ValueError):
    """Malformed edge-list input; the message carries the line number."""


def _tokens(line: str) -> List[str]:
    # SNAP csv exports are comma separated, KONECT and metis-like files are
    # whitespace separated; treating commas as whitespace covers both
    return line.replace(",", " ").split()


def load_edge_list(
    source: Source, fmt: str = "auto"
) -> Tuple[List[EdgeRecord], int, List[int]]:
    """Parse an edge list into raw records.

    Returns ``(records, n, original_ids)`` where node ids have been remapped
    to the contiguous range 0..n-1 and ``original_ids[i]`` is the input id of
    internal node ``i``. Duplicate lines are kept as-is; merging opposite and
    parallel arcs is the job of :func:`signedclust.graph.normalize`.

    ``fmt`` is one of ``snap``, ``konect``, ``metis-like`` or ``auto``; the
    dialects differ only in separators and comment conventions, all of which
    are accepted unconditionally, so the flag exists for explicitness.
    An optional first data line ``p <n> <m>`` declares the node count (ids
    must then already lie in 0..n-1 and are kept as given, so isolated nodes
    survive).

    Extra trailing columns (timestamps) are ignored. A missing weight column
    means weight +1.
    """
    if fmt not in ("auto", "snap", "konect", "metis-like"):
        raise ValueError(f"unknown edge list format: {fmt!r}")
    close = False
    if isinstance(source, (str, Path)):
        stream: IO[str] = open(source, "r", encoding="utf-8")
        close = True
    else:
        stream = source
    raw: List[Tuple[int, int, float]] = []
    declared_n: Optional[int] = None
    try:
        for lineno, line in enumerate(stream, 1):
            line = line.strip()
            if not line or line[0] in "#%":
                continue
            parts = _tokens(line)
            if parts[0] == "p":
                if raw or declared_n is not None:
                    raise EdgeListFormatError(
                        f"line {lineno}: 'p' header after data"
                    )
                try:
                    declared_n = int(parts[1])
                except (IndexError, ValueError):
                    raise EdgeListFormatError(
                        f"line {lineno}: malformed header {line!r}"
                    ) from None
                continue
            if len(parts) < 2:
                raise EdgeListFormatError(f"line {lineno}: malformed line {line!r}")
            try:
                u = int(parts[0])
                v = int(parts[1])
                w = float(parts[2]) if len(parts) >= 3 else 1.0
            except ValueError:
                raise EdgeListFormatError(
                    f"line {lineno}: non-numeric field in {line!r}"
                ) from None
            if u < 0 or v < 0:
                raise EdgeListFormatError(f"line {lineno}: negative node id")
            raw.append((u, v, w))
    finally:
        if close:
            stream.close()

    if not raw and declared_n is None:
        raise EdgeListFormatError("empty input: no edges and no 'p' header")

    if declared_n is not None:
        n = declared_n
        for u, v, _ in raw:
            if u >= n or v >= n:
                raise EdgeListFormatError(
                    f"node id {max(u, v)} exceeds declared node count {n}"
                )
        records = [EdgeRecord(u, v, w) for u, v, w in raw]
        original_ids = list(range(n))
    else:
        seen = sorted({x for u, v, _ in raw for x in (u, v)})
        remap = {orig: i for i, orig in enumerate(seen)}
        n = len(seen)
        records = [EdgeRecord(remap[u], remap[v], w) for u, v, w in raw]
        original_ids = seen
    return records, n, original_ids


def load_graph(source: Source, raw_weights: bool = False, fmt: str = "auto") -> SignedGraph:
    """Load and normalize an instance in one step."""
    records, n, original_ids = load_edge_list(source, fmt=fmt)
    return normalize(records, n, raw_weights=raw_weights, original_ids=original_ids)


def write_edge_list(g: SignedGraph, target: Source) -> None:
    """Write the canonical normalized edge list for ``g``.

    The header comment records n, m+, m- and the negative-weight sum; a
    ``p n m`` line follows so isolated nodes round-trip.
    """
    close = False
    if isinstance(target, (str, Path)):
        out: IO[str] = open(target, "w", encoding="utf-8")
        close = True
    else:
        out = target
    try:
        out.write(
            f"# n {g.n} m+ {g.m_plus} m- {g.m_minus} sum_neg {g.sum_neg:g}\n"
        )
        out.write(f"p {g.n} {g.m}\n")
        for u, v, w in zip(g.edges_u, g.edges_v, g.edges_w):
            out.write(f"{u} {v} {w:g}\n")
    finally:
        if close:
            out.close()


def write_clustering(
    target: Source,
    g: SignedGraph,
    assignment: np.ndarray,
    cut: float,
    seed: Optional[int] = None,
) -> None:
    """Write one ``original_node_id cluster_id`` line per node.

    Cluster ids are relabeled to 0..k-1 by first occurrence so that runs
    which find the same partition produce byte-identical files. Wall time is
    deliberately kept out of this file (it lives in the metrics record) for
    the same reason.
    """
    assignment = np.asarray(assignment)
    _, inverse = np.unique(assignment, return_inverse=True)
    order = {}
    canon = np.empty_like(inverse)
    for i, c in enumerate(inverse):
        c = int(c)
        if c not in order:
            order[c] = len(order)
        canon[i] = order[c]
    k = len(order)
    z = _z_or_none(g, cut)
    ids = g.original_ids if g.original_ids is not None else range(g.n)
    close = False
    if isinstance(target, (str, Path)):
        out: IO[str] = open(target, "w", encoding="utf-8")
        close = True
    else:
        out = target
    try:
        out.write(f"# edge_cut {cut:g}\n")
        out.write(f"# z_value {'NA' if z is None else format(z, 'g')}\n")
        out.write(f"# k {k}\n")
        out.write(f"# seed {'NA' if seed is None else seed}\n")
        for orig, c in zip(ids, canon):
            out.write(f"{orig} {c}\n")
    finally:
        if close:
            out.close()


def _z_or_none(g: SignedGraph, cut: float) -> Optional[float]:
    if g.sum_neg == 0:
        return None
    return 1.0 - cut / g.sum_neg


def metrics_record(
    instance: str,
    algorithm: str,
    seed: Optional[int],
    g: SignedGraph,
    assignment: np.ndarray,
    cut: float,
    time_seconds: float,
) -> dict:
    """Flat metrics object as emitted by the CLI (JSON-serializable)."""
    return {
        "instance": instance,
        "algorithm": algorithm,
        "seed": seed,
        "edge_cut": float(cut),
        "z_value": _z_or_none(g, cut),
        "k": int(np.unique(np.asarray(assignment)).size),
        "time_seconds": float(time_seconds),
    }


def dump_metrics(record: dict, target: Source) -> None:
    """Write a metrics record (or list of records) as JSON."""
    close = False
    if isinstance(target, (str, Path)):
        out: IO[str] = open(target, "w", encoding="utf-8")
        close = True
    else:
        out = target
    try:
        json.dump(record, out, indent=2)
        out.write("\n")
    finally:
        if close:
            out.close()
