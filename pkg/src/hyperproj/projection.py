"""Order-n projected graphs of a weighted hypergraph.

The order-n projection has one node per (n-1)-subset of the vertex universe
(a "facet") and one edge per pair of facets whose union is an n-subset
contained in at least one hyperedge; the edge weight is the total weight of
the hyperedges containing that union. Every active n-subset therefore
induces a clique of C(n,2) equally weighted edges on its n facets, so the
graph is stored compactly as a map from active n-subsets to weights instead
of materialized facet pairs.

``project`` builds that map by enumerating the n-subsets of each hyperedge;
``project_bruteforce`` is an independent reference that enumerates all facet
pairs of the full vertex universe and tests union size and containment
directly. It exists for cross-checking on small instances only.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ProjectionBudgetError
from .hypergraph import Hypergraph

Subset = tuple[int, ...]

DEFAULT_MAX_SUBSETS = 20_000_000
DEFAULT_MAX_FACETS = 3_000


class ProjectedGraph:
    """Compact order-n projection: active n-subsets mapped to weights.

    Instances are immutable once built; the facet index and neighbor sets
    are derived lazily and cached.
    """

    __slots__ = ("order", "subset_weights", "_facet_index", "_neighbor_cache")

    def __init__(self, order: int, subset_weights: dict[Subset, int]):
        if order < 2:
            raise ValueError(f"projection order must be >= 2, got {order}")
        self.order = order
        self.subset_weights: dict[Subset, int] = dict(subset_weights)
        self._facet_index: dict[Subset, tuple[Subset, ...]] | None = None
        self._neighbor_cache: dict[Subset, frozenset[Subset]] = {}

    @property
    def facet_index(self) -> dict[Subset, tuple[Subset, ...]]:
        """Inverse incidence: facet -> active n-subsets containing it."""
        if self._facet_index is None:
            index: dict[Subset, list[Subset]] = {}
            for subset in self.subset_weights:
                for facet in itertools.combinations(subset, self.order - 1):
                    index.setdefault(facet, []).append(subset)
            self._facet_index = {f: tuple(s) for f, s in index.items()}
        return self._facet_index

    def subset_weight(self, subset: Subset) -> int:
        """Weight of an n-subset; 0 when it is inactive."""
        subset = tuple(subset)
        if len(subset) != self.order:
            raise ValueError(
                f"expected a {self.order}-subset, got cardinality {len(subset)}"
            )
        return self.subset_weights.get(subset, 0)

    def facet_neighbors(self, facet: Subset) -> frozenset[Subset]:
        """All facets adjacent to ``facet``: their union is an active n-subset."""
        facet = tuple(facet)
        if len(facet) != self.order - 1:
            raise ValueError(
                f"expected a {self.order - 1}-subset, got cardinality {len(facet)}"
            )
        cached = self._neighbor_cache.get(facet)
        if cached is not None:
            return cached
        neighbors: set[Subset] = set()
        for subset in self.facet_index.get(facet, ()):
            for other in itertools.combinations(subset, self.order - 1):
                if other != facet:
                    neighbors.add(other)
        result = frozenset(neighbors)
        self._neighbor_cache[facet] = result
        return result

    def edge_count(self) -> int:
        """Number of materialized facet-pair edges: C(n,2) per active subset."""
        return math.comb(self.order, 2) * len(self.subset_weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjectedGraph):
            return NotImplemented
        return self.order == other.order and self.subset_weights == other.subset_weights

    def __hash__(self) -> int:  # pragma: no cover - not used as dict key
        return hash((self.order, frozenset(self.subset_weights.items())))

    def __repr__(self) -> str:
        return (
            f"ProjectedGraph(order={self.order}, "
            f"active_subsets={len(self.subset_weights)})"
        )


@dataclass(frozen=True)
class Expansion:
    """Projections for consecutive orders 2..n_max of one hypergraph."""

    graphs: tuple[ProjectedGraph, ...]

    def __post_init__(self) -> None:
        for i, pg in enumerate(self.graphs):
            if pg.order != i + 2:
                raise ValueError("expansion orders must be consecutive from 2")

    @property
    def max_order(self) -> int:
        return len(self.graphs) + 1

    def graph(self, order: int) -> ProjectedGraph:
        if not 2 <= order <= self.max_order:
            raise ValueError(f"order {order} not in expansion (2..{self.max_order})")
        return self.graphs[order - 2]


def project(
    hg: Hypergraph, n: int, *, max_subsets: int = DEFAULT_MAX_SUBSETS
) -> ProjectedGraph:
    """Build the order-n projection by enumerating n-subsets per hyperedge.

    Refuses to run when the enumeration bound sum_e C(|e|, n) exceeds
    ``max_subsets`` (an upper estimate of the active-subset count).
    """
    if n < 2:
        raise ValueError(f"projection order must be >= 2, got {n}")
    estimate = sum(
        math.comb(len(edge), n) for edge in hg.hyperedges if len(edge) >= n
    )
    if estimate > max_subsets:
        raise ProjectionBudgetError(
            f"order-{n} projection may hold up to {estimate} active subsets, "
            f"above the budget of {max_subsets}"
        )
    weights: dict[Subset, int] = {}
    for edge, w in zip(hg.hyperedges, hg.weights):
        if len(edge) < n:
            continue
        for subset in itertools.combinations(edge, n):
            weights[subset] = weights.get(subset, 0) + w
    return ProjectedGraph(n, weights)


def expand(
    hg: Hypergraph, n_max: int, *, max_subsets: int = DEFAULT_MAX_SUBSETS
) -> Expansion:
    """Projections for every order 2..n_max, built from the same hypergraph."""
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    return Expansion(
        tuple(project(hg, k, max_subsets=max_subsets) for k in range(2, n_max + 1))
    )


def _bit_count(values: np.ndarray) -> np.ndarray:
    try:
        return np.bitwise_count(values)
    except AttributeError:  # numpy < 2
        v = values
        v = v - ((v >> 1) & 0x5555555555555555)
        v = (v & 0x3333333333333333) + ((v >> 2) & 0x3333333333333333)
        v = (v + (v >> 4)) & 0x0F0F0F0F0F0F0F0F
        return (v * 0x0101010101010101) >> 56


def project_bruteforce(
    hg: Hypergraph, n: int, *, max_facets: int = DEFAULT_MAX_FACETS
) -> ProjectedGraph:
    """Reference projection: enumerate all facet pairs of the vertex universe.

    For every pair of distinct (n-1)-subsets of V it tests |union| == n and
    accumulates the weight of hyperedges containing the union, using bitmask
    representations. Intended as a test oracle for |V| up to ~15; raises
    ProjectionBudgetError when C(|V|, n-1) exceeds ``max_facets``.
    """
    if n < 2:
        raise ValueError(f"projection order must be >= 2, got {n}")
    if hg.node_count > 63:
        raise ProjectionBudgetError("bruteforce oracle supports at most 63 nodes")
    if n - 1 > hg.node_count:
        return ProjectedGraph(n, {})
    facet_count = math.comb(hg.node_count, n - 1)
    if facet_count > max_facets:
        raise ProjectionBudgetError(
            f"{facet_count} facets exceed the oracle bound of {max_facets}"
        )
    facets = list(itertools.combinations(range(hg.node_count), n - 1))
    masks = np.array([sum(1 << v for v in f) for f in facets], dtype=np.int64)
    if len(masks) == 0:
        return ProjectedGraph(n, {})
    union = masks[:, None] | masks[None, :]
    union_size = _bit_count(union)
    weight = np.zeros(union.shape, dtype=np.int64)
    for edge, w in zip(hg.hyperedges, hg.weights):
        edge_mask = sum(1 << v for v in edge)
        weight += w * ((union & edge_mask) == union)
    upper = np.triu(np.ones(union.shape, dtype=bool), k=1)
    active = upper & (union_size == n) & (weight > 0)
    subset_weights: dict[Subset, int] = {}
    for i, j in zip(*np.nonzero(active)):
        subset = tuple(sorted(set(facets[i]) | set(facets[j])))
        subset_weights[subset] = int(weight[i, j])
    return ProjectedGraph(n, subset_weights)


def save_projection(pg: ProjectedGraph, path: str | Path) -> Path:
    """Write the cache format: ``n <order> <count>`` then one subset per line."""
    path = Path(path)
    lines = [f"n {pg.order} {len(pg.subset_weights)}"]
    for subset in sorted(pg.subset_weights):
        ids = " ".join(str(v) for v in subset)
        lines.append(f"{ids} {pg.subset_weights[subset]}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def load_projection(path: str | Path) -> ProjectedGraph:
    """Reload a cache file written by :func:`save_projection`, bit-exactly."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 3 or header[0] != "n":
            raise ValueError(f"bad projection cache header in {path}")
        order, count = int(header[1]), int(header[2])
        weights: dict[Subset, int] = {}
        for line in fh:
            parts = [int(tok) for tok in line.split()]
            if len(parts) != order + 1:
                raise ValueError(f"bad projection cache line in {path}: {line!r}")
            weights[tuple(parts[:-1])] = parts[-1]
    if len(weights) != count:
        raise ValueError(
            f"projection cache {path} declares {count} subsets, holds {len(weights)}"
        )
    return ProjectedGraph(order, weights)
