"""Per-order candidate features over projected graphs.

For a candidate node set c and an order-n projection, the "inner pairs" are
all unordered pairs of distinct (n-1)-subsets of c whose union is an
n-subset of c; there are C(|c|,n) * C(n,2) of them, and each carries the
weight of its union (0 when the union is inactive).

Mean features (GM/HM/AM) are the geometric, harmonic and arithmetic means of
the inner-pair weights. By default absent pairs count as weight 0, which
makes GM and HM vanish as soon as any potential pair is missing; pass
``present_only=True`` to average over existing pairs instead.

Neighborhood features (CN/JC/AA) score candidates by facet neighborhoods.
Two aggregation modes exist:

* ``"pairwise"`` (default): each inner pair (u, v) is scored with the
  classical pairwise measure on the projection (common-neighbor count,
  Jaccard overlap, log-degree-discounted common-neighbor sum) and the pair
  scores are aggregated - summed for CN/AA, averaged over all potential
  pairs for JC so the value stays in [0, 1].
* ``"joint"``: one global measure over the neighborhoods of all facets of
  c (intersection cardinality, intersection-over-union, discounted sum over
  the global intersection). For orders >= 3 every candidate has facets that
  are disjoint from or equal to any given facet, so the global intersection
  is structurally empty and the joint value is 0; the mode is kept for the
  order-2 semantics.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import IO, Sequence

import numpy as np

from .errors import FeatureComputationError
from .projection import Expansion, ProjectedGraph, Subset


class FeatureKind(str, Enum):
    GM = "GM"
    HM = "HM"
    AM = "AM"
    CN = "CN"
    JC = "JC"
    AA = "AA"


MEAN_KINDS = frozenset({FeatureKind.GM, FeatureKind.HM, FeatureKind.AM})
NEIGHBORHOOD_KINDS = frozenset({FeatureKind.CN, FeatureKind.JC, FeatureKind.AA})


def inner_pairs(candidate: Sequence[int], n: int) -> list[tuple[Subset, Subset]]:
    """All unordered facet pairs of c whose union is an n-subset of c.

    Empty when |c| < n. The pair list includes pairs whose edge is absent
    from the graph; callers decide how missing weights are treated.
    """
    c = tuple(sorted(candidate))
    if len(c) < n:
        return []
    pairs: list[tuple[Subset, Subset]] = []
    for subset in itertools.combinations(c, n):
        for i, j in itertools.combinations(range(n), 2):
            u = subset[:i] + subset[i + 1 :]
            v = subset[:j] + subset[j + 1 :]
            pairs.append((u, v))
    return pairs


def _inner_weights(pg: ProjectedGraph, c: Subset) -> list[int]:
    return [
        pg.subset_weights.get(subset, 0)
        for subset in itertools.combinations(c, pg.order)
    ]


def mean_feature(
    pg: ProjectedGraph,
    candidate: Sequence[int],
    kind: FeatureKind,
    *,
    present_only: bool = False,
) -> float:
    """GM/HM/AM of the candidate's inner-pair weights in one projection.

    Each distinct n-subset of the candidate is replicated C(n,2) times in the
    inner-pair list, which leaves all three means unchanged, so the means are
    computed over distinct subsets directly.
    """
    kind = FeatureKind(kind)
    if kind not in MEAN_KINDS:
        raise ValueError(f"{kind.value} is not a mean feature")
    c = tuple(sorted(set(candidate)))
    if len(c) < pg.order:
        return 0.0
    weights = _inner_weights(pg, c)
    if present_only:
        weights = [w for w in weights if w > 0]
        if not weights:
            return 0.0
    if kind is FeatureKind.AM:
        return math.fsum(weights) / len(weights)
    if any(w == 0 for w in weights):
        return 0.0
    if kind is FeatureKind.GM:
        return math.exp(math.fsum(math.log(w) for w in weights) / len(weights))
    return len(weights) / math.fsum(1.0 / w for w in weights)


def _pairwise_neighborhood(
    pg: ProjectedGraph, c: Subset, kind: FeatureKind
) -> float:
    total = 0.0
    pairs = inner_pairs(c, pg.order)
    for u, v in pairs:
        nu = pg.facet_neighbors(u)
        nv = pg.facet_neighbors(v)
        common = nu & nv
        if kind is FeatureKind.CN:
            total += len(common)
        elif kind is FeatureKind.JC:
            union_size = len(nu | nv)
            if union_size:
                total += len(common) / union_size
        else:  # AA
            for q in common:
                degree = len(pg.facet_neighbors(q))
                if degree >= 2:
                    total += 1.0 / math.log(degree)
    if kind is FeatureKind.JC:
        return total / len(pairs) if pairs else 0.0
    return total


def _joint_neighborhood(pg: ProjectedGraph, c: Subset, kind: FeatureKind) -> float:
    neighbor_sets = [
        pg.facet_neighbors(f) for f in itertools.combinations(c, pg.order - 1)
    ]
    if not neighbor_sets or any(not s for s in neighbor_sets):
        return 0.0
    common = set(neighbor_sets[0]).intersection(*neighbor_sets[1:])
    if kind is FeatureKind.CN:
        return float(len(common))
    if kind is FeatureKind.JC:
        union = set(neighbor_sets[0]).union(*neighbor_sets[1:])
        return len(common) / len(union) if union else 0.0
    total = 0.0
    for q in common:
        degree = len(pg.facet_neighbors(q))
        if degree >= 2:
            total += 1.0 / math.log(degree)
    return total


def neighborhood_feature(
    pg: ProjectedGraph,
    candidate: Sequence[int],
    kind: FeatureKind,
    *,
    mode: str = "pairwise",
) -> float:
    """CN/JC/AA of a candidate in one projection; see the module docstring."""
    kind = FeatureKind(kind)
    if kind not in NEIGHBORHOOD_KINDS:
        raise ValueError(f"{kind.value} is not a neighborhood feature")
    c = tuple(sorted(set(candidate)))
    if len(c) < pg.order:
        return 0.0
    if mode == "pairwise":
        return _pairwise_neighborhood(pg, c, kind)
    if mode == "joint":
        return _joint_neighborhood(pg, c, kind)
    raise ValueError(f"unknown neighborhood mode {mode!r}")


def candidate_feature(
    pg: ProjectedGraph,
    candidate: Sequence[int],
    kind: FeatureKind,
    *,
    present_only: bool = False,
    neighborhood_mode: str = "pairwise",
) -> float:
    kind = FeatureKind(kind)
    if kind in MEAN_KINDS:
        return mean_feature(pg, candidate, kind, present_only=present_only)
    return neighborhood_feature(pg, candidate, kind, mode=neighborhood_mode)


def feature_vector(
    expansion: Expansion,
    candidate: Sequence[int],
    kind: FeatureKind,
    *,
    present_only: bool = False,
    neighborhood_mode: str = "pairwise",
) -> list[float]:
    """One value per order 2..n_max, ascending; orders above |c| yield 0."""
    return [
        candidate_feature(
            pg,
            candidate,
            kind,
            present_only=present_only,
            neighborhood_mode=neighborhood_mode,
        )
        for pg in expansion.graphs
    ]


@dataclass(frozen=True)
class FeatureMatrix:
    """Per-candidate feature rows for one feature kind across orders."""

    values: np.ndarray  # shape (n_candidates, n_orders), float64
    labels: np.ndarray  # shape (n_candidates,), 1 for positives then 0
    column_names: tuple[str, ...]
    kind: FeatureKind

    def to_csv(self, target: str | Path | IO[str]) -> None:
        header = "label," + ",".join(self.column_names)
        lines = [header]
        for label, row in zip(self.labels, self.values):
            lines.append(",".join([str(int(label))] + [repr(float(x)) for x in row]))
        text = "\n".join(lines) + "\n"
        if hasattr(target, "write"):
            target.write(text)
        else:
            Path(target).write_text(text, encoding="utf-8")


def feature_matrix(
    expansion: Expansion,
    candidate_set,
    kind: FeatureKind,
    *,
    present_only: bool = False,
    neighborhood_mode: str = "pairwise",
) -> FeatureMatrix:
    """Rows for positives then negatives, labels 1 then 0, columns x2..xn.

    ``candidate_set`` is anything with ``positives`` and ``negatives``
    sequences of node sets (e.g. :class:`hyperproj.candidates.CandidateSet`).
    """
    kind = FeatureKind(kind)
    pos = list(candidate_set.positives)
    neg = list(candidate_set.negatives)
    candidates = pos + neg
    values = np.zeros((len(candidates), len(expansion.graphs)), dtype=np.float64)
    for i, candidate in enumerate(candidates):
        values[i] = feature_vector(
            expansion,
            candidate,
            kind,
            present_only=present_only,
            neighborhood_mode=neighborhood_mode,
        )
        if not np.isfinite(values[i]).all():
            raise FeatureComputationError(
                f"non-finite {kind.value} value for candidate {candidate}"
            )
    labels = np.array([1] * len(pos) + [0] * len(neg), dtype=np.int8)
    columns = tuple(f"x{pg.order}" for pg in expansion.graphs)
    return FeatureMatrix(values=values, labels=labels, column_names=columns, kind=kind)
