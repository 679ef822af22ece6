"""Dataset-level diagnostics: triadic edge density and the information
shared between pairwise and triadic co-occurrence weights.

A uniformly sampled unordered node triple yields two variables: the three
pairwise weights and the one triadic weight, both passed through the
log-scale bin ``min(ceil(log2(w + 1)), 9)``. Their joint histogram feeds
plug-in (maximum-likelihood) estimates of mutual information and conditional
entropy in bits.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass

from .projection import ProjectedGraph

W2Key = tuple[int, int, int]
Cell = tuple[W2Key, int]


def bin_weight(weight: int) -> int:
    """Log-scale bin of a nonnegative integer weight, capped at 9.

    Equals ceil(log2(weight + 1)) clamped to {0..9}; computed with integer
    bit length so it is exact for arbitrarily large weights.
    """
    if weight < 0:
        raise ValueError(f"weight must be >= 0, got {weight}")
    return min(int(weight).bit_length(), 9)


@dataclass(frozen=True)
class JointHistogram:
    """Empirical joint counts of (binned pairwise triple, binned triadic)."""

    counts: dict[Cell, int]
    total: int

    def __post_init__(self) -> None:
        if self.total < 1:
            raise ValueError("histogram total must be >= 1")
        if sum(self.counts.values()) != self.total:
            raise ValueError("histogram counts do not sum to total")


def edge_density_3pg(pg3: ProjectedGraph, node_count: int) -> float:
    """Active 3-subsets as a percentage of all C(|V|, 3) possible triples.

    The C(3,2) facet-pair multiplicity cancels between numerator and
    denominator, so counting subsets gives the same ratio as counting edges.
    """
    if pg3.order != 3:
        raise ValueError(f"expected an order-3 projection, got order {pg3.order}")
    if node_count < 3:
        raise ValueError(f"need at least 3 nodes, got {node_count}")
    return 100.0 * len(pg3.subset_weights) / math.comb(node_count, 3)


def sample_triples(
    pg2: ProjectedGraph,
    pg3: ProjectedGraph,
    node_count: int,
    num_samples: int = 1_000_000,
    seed: int = 0,
    *,
    sort_components: bool = True,
) -> JointHistogram:
    """Histogram binned weights of uniformly sampled unordered node triples.

    Absent edges contribute weight 0. The three pairwise bins are sorted by
    default so the statistic does not depend on the arbitrary node labeling;
    pass ``sort_components=False`` to keep them in drawn order.
    """
    if pg2.order != 2 or pg3.order != 3:
        raise ValueError("expected projections of orders 2 and 3")
    if node_count < 3:
        raise ValueError(f"need at least 3 nodes, got {node_count}")
    if num_samples < 1:
        raise ValueError("num_samples must be >= 1")
    rng = random.Random(seed)
    pair_weight = pg2.subset_weights
    triple_weight = pg3.subset_weights
    counts: Counter[Cell] = Counter()
    nodes = range(node_count)
    for _ in range(num_samples):
        a, b, c = rng.sample(nodes, 3)
        bins = (
            bin_weight(pair_weight.get((a, b) if a < b else (b, a), 0)),
            bin_weight(pair_weight.get((b, c) if b < c else (c, b), 0)),
            bin_weight(pair_weight.get((a, c) if a < c else (c, a), 0)),
        )
        w2 = tuple(sorted(bins)) if sort_components else bins
        w3 = bin_weight(triple_weight.get(tuple(sorted((a, b, c))), 0))
        counts[(w2, w3)] += 1
    return JointHistogram(counts=dict(counts), total=num_samples)


def _entropy(counts: dict, total: int) -> float:
    # H = log2(N) - (1/N) * sum c*log2(c)
    return math.log2(total) - math.fsum(
        c * math.log2(c) for c in counts.values() if c > 0
    ) / total


def mutual_information(hist: JointHistogram) -> float:
    """Plug-in mutual information (bits) between the two binned variables."""
    total = hist.total
    marginal_w2: Counter[W2Key] = Counter()
    marginal_w3: Counter[int] = Counter()
    for (w2, w3), c in hist.counts.items():
        marginal_w2[w2] += c
        marginal_w3[w3] += c
    acc = 0.0
    for (w2, w3), c in hist.counts.items():
        p_joint = c / total
        p_w2 = marginal_w2[w2] / total
        p_w3 = marginal_w3[w3] / total
        acc += p_joint * math.log2(p_joint / (p_w2 * p_w3))
    return acc


def conditional_entropy(hist: JointHistogram) -> float:
    """Plug-in conditional entropy H(triadic | pairwise triple) in bits."""
    marginal_w2: Counter[W2Key] = Counter()
    for (w2, _), c in hist.counts.items():
        marginal_w2[w2] += c
    return _entropy(hist.counts, hist.total) - _entropy(marginal_w2, hist.total)


def triadic_entropy(hist: JointHistogram) -> float:
    """Plug-in marginal entropy of the binned triadic weight, in bits."""
    marginal_w3: Counter[int] = Counter()
    for (_, w3), c in hist.counts.items():
        marginal_w3[w3] += c
    return _entropy(marginal_w3, hist.total)


def diagnostics_report(
    pg2: ProjectedGraph,
    pg3: ProjectedGraph,
    node_count: int,
    num_samples: int = 1_000_000,
    seed: int = 0,
) -> dict:
    """Full diagnostics block as a JSON-ready dict."""
    hist = sample_triples(pg2, pg3, node_count, num_samples, seed)
    return {
        "edge_density_pct": edge_density_3pg(pg3, node_count),
        "mutual_information_bits": mutual_information(hist),
        "conditional_entropy_bits": conditional_entropy(hist),
        "num_samples": num_samples,
        "seed": seed,
    }
