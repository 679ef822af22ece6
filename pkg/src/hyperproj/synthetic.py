"""Synthetic hypergraph generators for experiments and tests."""

from __future__ import annotations

import random
from pathlib import Path
from typing import Sequence

from .hypergraph import Hypergraph, NodeSet, dedup_and_weight


def planted_triples_dataset(
    n_nodes: int = 200,
    n_triples: int = 300,
    n_extensions: int = 400,
    n_background: int = 2000,
    max_multiplicity: int = 3,
    seed: int = 0,
) -> list[NodeSet]:
    """Raw hyperedge multiset with planted triadic structure.

    Plants ``n_triples`` distinct random triples and emits each as a size-3
    hyperedge 1..max_multiplicity times; adds ``n_extensions`` size-4
    hyperedges built only by extending a planted triple with a random extra
    node; adds ``n_background`` random size-2/3 hyperedges as noise. The
    size-4 sets are predictable from triadic structure but not from pairwise
    structure alone, which makes the dataset a useful separation probe.
    """
    rng = random.Random(seed)
    nodes = range(n_nodes)
    planted: set[NodeSet] = set()
    while len(planted) < n_triples:
        planted.add(tuple(sorted(rng.sample(nodes, 3))))
    triples = sorted(planted)
    edges: list[NodeSet] = []
    for triple in triples:
        edges.extend([triple] * rng.randint(1, max_multiplicity))
    for _ in range(n_extensions):
        triple = rng.choice(triples)
        extra = rng.randrange(n_nodes)
        while extra in triple:
            extra = rng.randrange(n_nodes)
        edges.append(tuple(sorted((*triple, extra))))
    for _ in range(n_background):
        size = rng.choice((2, 3))
        edges.append(tuple(sorted(rng.sample(nodes, size))))
    return edges


def write_edge_list(edges: Sequence[NodeSet], path: str | Path) -> Path:
    """Write a raw multiset in edge-list format (one hyperedge per line)."""
    path = Path(path)
    lines = [" ".join(str(v) for v in edge) for edge in edges]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def random_hypergraph(
    seed: int,
    max_nodes: int = 12,
    max_edges: int = 20,
    min_edge_size: int = 2,
    max_edge_size: int = 6,
) -> Hypergraph:
    """Small random hypergraph for property tests and oracle suites."""
    rng = random.Random(seed)
    node_count = rng.randint(max(min_edge_size, 2), max_nodes)
    n_edges = rng.randint(1, max_edges)
    edges = []
    for _ in range(n_edges):
        size = rng.randint(min_edge_size, min(max_edge_size, node_count))
        edges.append(tuple(sorted(rng.sample(range(node_count), size))))
    hg = dedup_and_weight(edges)
    # keep the drawn universe even when high ids were never sampled
    if hg.node_count < node_count:
        hg = Hypergraph(
            node_count=node_count,
            hyperedges=hg.hyperedges,
            weights=hg.weights,
        )
    return hg
