"""Weighted hypergraphs and dataset parsing.

A hypergraph is stored as a list of unique, strictly sorted node-id tuples
with positive integer weights (weight = number of occurrences of the node
set in the raw input). Two input formats are supported:

* simplicial: a ``<name>-nverts.txt`` file with one cardinality per line and
  a ``<name>-simplices.txt`` file with the flattened node ids (an optional
  ``<name>-times.txt`` is accepted and ignored);
* edge list: one hyperedge per line, whitespace-separated decimal ids,
  ``#``-prefixed comment lines.

Node ids are remapped to a dense 0-based range; the original ids are kept
for reporting.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import IO, Iterable, Sequence

from .errors import (
    EmptyHypergraphError,
    MalformedDatasetError,
    MalformedLineError,
    ParseError,
)

DEFAULT_MAX_SIZE = 10

NodeSet = tuple[int, ...]


@dataclass(frozen=True)
class RawHyperedges:
    """A parsed hyperedge multiset, ids remapped to a dense 0-based range."""

    edges: tuple[NodeSet, ...]
    original_ids: tuple[int, ...]

    @property
    def node_count(self) -> int:
        return len(self.original_ids)


@dataclass(frozen=True)
class Hypergraph:
    """Unique weighted hyperedges over a dense node universe.

    Invariants: every node set is strictly sorted and duplicate-free with
    cardinality >= 2, node sets are pairwise distinct, weights are >= 1 and
    every node id is < ``node_count``.
    """

    node_count: int
    hyperedges: tuple[NodeSet, ...]
    weights: tuple[int, ...]
    original_ids: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.hyperedges) != len(self.weights):
            raise ValueError("hyperedges and weights must have equal length")

    @cached_property
    def size_index(self) -> dict[int, tuple[int, ...]]:
        """Map hyperedge cardinality to the indices of hyperedges of that size."""
        index: dict[int, list[int]] = {}
        for i, edge in enumerate(self.hyperedges):
            index.setdefault(len(edge), []).append(i)
        return {k: tuple(v) for k, v in index.items()}

    def edges_of_size(self, size: int) -> tuple[int, ...]:
        return self.size_index.get(size, ())

    def total_weight(self) -> int:
        return sum(self.weights)

    @property
    def num_hyperedges(self) -> int:
        return len(self.hyperedges)


def _read_ints(stream: IO[str], name: str) -> list[int]:
    values = []
    for token in stream.read().split():
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(f"non-integer token {token!r} in {name}") from None
    return values


def _remap_dense(edges: list[NodeSet]) -> RawHyperedges:
    original = sorted({v for edge in edges for v in edge})
    index = {v: i for i, v in enumerate(original)}
    # edges are sorted by original id; the remap is monotone, so order is kept
    remapped = tuple(tuple(index[v] for v in edge) for edge in edges)
    return RawHyperedges(edges=remapped, original_ids=tuple(original))


def _keep(node_set: NodeSet, max_size: int) -> bool:
    return 2 <= len(node_set) <= max_size


def parse_simplicial_dataset(
    nverts_stream: IO[str],
    simplices_stream: IO[str],
    max_size: int = DEFAULT_MAX_SIZE,
) -> RawHyperedges:
    """Parse the nverts/simplices file pair into a raw hyperedge multiset.

    Hyperedges with fewer than 2 or more than ``max_size`` distinct nodes are
    dropped. Repeated ids inside one simplex are collapsed before the size
    filter is applied.
    """
    nverts = _read_ints(nverts_stream, "nverts")
    flat = _read_ints(simplices_stream, "simplices")
    if sum(nverts) != len(flat):
        raise MalformedDatasetError(
            f"nverts sums to {sum(nverts)} but simplices holds {len(flat)} ids"
        )
    edges: list[NodeSet] = []
    pos = 0
    for k in nverts:
        node_set = tuple(sorted(set(flat[pos : pos + k])))
        pos += k
        if _keep(node_set, max_size):
            edges.append(node_set)
    return _remap_dense(edges)


def parse_edge_list(stream: IO[str], max_size: int = DEFAULT_MAX_SIZE) -> RawHyperedges:
    """Parse one hyperedge per line; ``#`` lines are comments.

    A repeated node id within a line raises MalformedLineError.
    """
    edges: list[NodeSet] = []
    for lineno, line in enumerate(stream, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        values = []
        for token in stripped.split():
            try:
                values.append(int(token))
            except ValueError:
                raise ParseError(
                    f"non-integer token {token!r} on line {lineno}"
                ) from None
        if len(set(values)) != len(values):
            raise MalformedLineError(f"repeated node id on line {lineno}")
        node_set = tuple(sorted(values))
        if _keep(node_set, max_size):
            edges.append(node_set)
    return _remap_dense(edges)


def dedup_and_weight(raw: RawHyperedges | Iterable[Sequence[int]]) -> Hypergraph:
    """Collapse a hyperedge multiset into unique node sets with multiplicities.

    Accepts either a parsed RawHyperedges or any iterable of node-id
    sequences (in which case ids are assumed dense already and the node
    count is max id + 1).
    """
    if isinstance(raw, RawHyperedges):
        edges = raw.edges
        node_count = raw.node_count
        original_ids = raw.original_ids
    else:
        edges = tuple(tuple(sorted(e)) for e in raw)
        node_count = max((e[-1] for e in edges if e), default=-1) + 1
        original_ids = None
    counts = Counter(edges)
    if not counts:
        raise EmptyHypergraphError("no hyperedges after parsing and filtering")
    ordered = sorted(counts.items())
    return Hypergraph(
        node_count=node_count,
        hyperedges=tuple(edge for edge, _ in ordered),
        weights=tuple(w for _, w in ordered),
        original_ids=original_ids,
    )


def remove_hyperedges(hg: Hypergraph, indices: Iterable[int]) -> Hypergraph:
    """Return a copy of ``hg`` without the indexed hyperedges.

    The node universe is unchanged; the input hypergraph is not modified.
    """
    drop = set(indices)
    for i in drop:
        if not 0 <= i < len(hg.hyperedges):
            raise IndexError(f"hyperedge index {i} out of range")
    keep = [i for i in range(len(hg.hyperedges)) if i not in drop]
    return Hypergraph(
        node_count=hg.node_count,
        hyperedges=tuple(hg.hyperedges[i] for i in keep),
        weights=tuple(hg.weights[i] for i in keep),
        original_ids=hg.original_ids,
    )


def resolve_simplicial_paths(path: str | Path) -> tuple[Path, Path]:
    """Locate the nverts/simplices pair for a prefix, directory or file path."""
    p = Path(path)
    if p.is_dir():
        nverts = sorted(p.glob("*-nverts.txt"))
        if len(nverts) != 1:
            raise MalformedDatasetError(
                f"expected exactly one *-nverts.txt under {p}, found {len(nverts)}"
            )
        prefix = str(nverts[0])[: -len("-nverts.txt")]
    elif p.name.endswith("-nverts.txt"):
        prefix = str(p)[: -len("-nverts.txt")]
    elif p.name.endswith("-simplices.txt"):
        prefix = str(p)[: -len("-simplices.txt")]
    else:
        prefix = str(p)
    nverts_path = Path(prefix + "-nverts.txt")
    simplices_path = Path(prefix + "-simplices.txt")
    if not nverts_path.exists() or not simplices_path.exists():
        raise MalformedDatasetError(f"missing {nverts_path} or {simplices_path}")
    return nverts_path, simplices_path


def load_dataset(
    path: str | Path, format: str = "edgelist", max_size: int = DEFAULT_MAX_SIZE
) -> Hypergraph:
    """Read a dataset file (or simplicial prefix) into a weighted hypergraph."""
    if format == "simplicial":
        nverts_path, simplices_path = resolve_simplicial_paths(path)
        with open(nverts_path, encoding="utf-8") as nv, open(
            simplices_path, encoding="utf-8"
        ) as sp:
            raw = parse_simplicial_dataset(nv, sp, max_size)
    elif format == "edgelist":
        with open(path, encoding="utf-8") as fh:
            raw = parse_edge_list(fh, max_size)
    else:
        raise ValueError(f"unknown dataset format {format!r}")
    return dedup_and_weight(raw)
