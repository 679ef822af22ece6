"""Candidate construction: held-out positives and star/clique negatives.

Positives come from randomly removing target-size hyperedges until the
retained fraction is reached or no target-size hyperedge is left. Negatives
are node sets sampled from the pairwise projection of the remaining
hypergraph: stars draw a center plus distinct neighbors, cliques grow a seed
node through the running common neighborhood. Sampled sets are rejected when
they collide with the full original hyperedge set or with earlier samples.

All sampling is driven by explicit integer seeds and is deterministic.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from collections import defaultdict
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Sequence

from .errors import AssemblyError, EmptyPositivesError, SplitError
from .hypergraph import Hypergraph, NodeSet, remove_hyperedges
from .projection import ProjectedGraph

NEGATIVE_TYPES = ("star", "clique")
DEFAULT_ATTEMPT_FACTOR = 100


@dataclass(frozen=True)
class CandidateSet:
    """Labeled candidates of one target size plus generation metadata.

    ``under_sampled`` is set when the negative sampler could not reach
    ``multiplier * len(positives)`` within its attempt budget; the set is
    never silently padded.
    """

    target_size: int
    positives: tuple[NodeSet, ...]
    negatives: tuple[NodeSet, ...]
    neg_type: str
    multiplier: int
    seed: int
    under_sampled: bool = False

    def to_json(self) -> str:
        payload = {
            "target_size": self.target_size,
            "neg_type": self.neg_type,
            "multiplier": self.multiplier,
            "seed": self.seed,
            "under_sampled": self.under_sampled,
            "positives": [list(c) for c in self.positives],
            "negatives": [list(c) for c in self.negatives],
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "CandidateSet":
        payload = json.loads(text)
        return cls(
            target_size=payload["target_size"],
            positives=tuple(tuple(c) for c in payload["positives"]),
            negatives=tuple(tuple(c) for c in payload["negatives"]),
            neg_type=payload["neg_type"],
            multiplier=payload["multiplier"],
            seed=payload["seed"],
            under_sampled=payload["under_sampled"],
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json() + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "CandidateSet":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def split_positives(
    hg: Hypergraph,
    target_size: int,
    retain_frac: float = 0.6,
    seed: int = 0,
) -> tuple[Hypergraph, tuple[NodeSet, ...]]:
    """Remove target-size hyperedges uniformly at random to form positives.

    Removal stops when ceil(retain_frac * |E|) hyperedges remain or when no
    target-size hyperedge is left, whichever comes first. Returns the reduced
    hypergraph and the removed node sets.
    """
    if not 0 < retain_frac < 1:
        raise ValueError(f"retain_frac must be in (0, 1), got {retain_frac}")
    pool = list(hg.edges_of_size(target_size))
    if not pool:
        raise EmptyPositivesError(
            f"no hyperedges of size {target_size} in the hypergraph"
        )
    total = len(hg.hyperedges)
    target_remaining = math.ceil(retain_frac * total)
    n_remove = min(len(pool), max(total - target_remaining, 0))
    rng = random.Random(seed)
    removed = sorted(rng.sample(pool, n_remove))
    positives = tuple(hg.hyperedges[i] for i in removed)
    return remove_hyperedges(hg, removed), positives


def pairwise_adjacency(pg2: ProjectedGraph) -> dict[int, frozenset[int]]:
    """Node-level adjacency of the order-2 projection."""
    if pg2.order != 2:
        raise ValueError(f"expected an order-2 projection, got order {pg2.order}")
    adjacency: dict[int, set[int]] = defaultdict(set)
    for u, v in pg2.subset_weights:
        adjacency[u].add(v)
        adjacency[v].add(u)
    return {node: frozenset(nbrs) for node, nbrs in adjacency.items()}


def sample_star_negatives(
    pg2: ProjectedGraph,
    target_size: int,
    count: int,
    forbidden: Iterable[NodeSet],
    seed: int = 0,
    *,
    strict: bool = False,
    attempt_factor: int = DEFAULT_ATTEMPT_FACTOR,
) -> tuple[tuple[NodeSet, ...], bool]:
    """Sample node sets formed by a center plus distinct neighbors.

    Strictness (pairwise non-adjacent leaves) is off by default; pass
    ``strict=True`` to reject samples whose leaves share an edge. Returns the
    samples and an under-sampled flag set when ``count`` was not reached
    within ``attempt_factor * count`` attempts.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    adjacency = pairwise_adjacency(pg2)
    neighbor_lists = {
        node: sorted(nbrs)
        for node, nbrs in adjacency.items()
        if len(nbrs) >= target_size - 1
    }
    centers = sorted(neighbor_lists)
    rng = random.Random(seed)
    blocked = set(tuple(sorted(c)) for c in forbidden)
    samples: list[NodeSet] = []
    budget = attempt_factor * count
    attempts = 0
    while len(samples) < count and attempts < budget and centers:
        attempts += 1
        center = rng.choice(centers)
        leaves = rng.sample(neighbor_lists[center], target_size - 1)
        if strict and any(
            b in adjacency[a] for a, b in itertools.combinations(leaves, 2)
        ):
            continue
        candidate = tuple(sorted((center, *leaves)))
        if candidate in blocked:
            continue
        blocked.add(candidate)
        samples.append(candidate)
    return tuple(samples), len(samples) < count


def sample_clique_negatives(
    pg2: ProjectedGraph,
    target_size: int,
    count: int,
    forbidden: Iterable[NodeSet],
    seed: int = 0,
    *,
    attempt_factor: int = DEFAULT_ATTEMPT_FACTOR,
) -> tuple[tuple[NodeSet, ...], bool]:
    """Sample node sets inducing complete subgraphs in the 2-projection.

    Each attempt draws a seed node, then repeatedly picks a uniform member
    of the running common neighborhood until the set has ``target_size``
    nodes; the construction guarantees all pairs are adjacent.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    adjacency = pairwise_adjacency(pg2)
    seeds = sorted(
        node for node, nbrs in adjacency.items() if len(nbrs) >= target_size - 1
    )
    rng = random.Random(seed)
    blocked = set(tuple(sorted(c)) for c in forbidden)
    samples: list[NodeSet] = []
    budget = attempt_factor * count
    attempts = 0
    while len(samples) < count and attempts < budget and seeds:
        attempts += 1
        node = rng.choice(seeds)
        members = [node]
        pool = set(adjacency[node])
        failed = False
        while len(members) < target_size:
            if not pool:
                failed = True
                break
            nxt = rng.choice(sorted(pool))
            members.append(nxt)
            pool &= adjacency[nxt]
            pool.discard(nxt)
        if failed:
            continue
        candidate = tuple(sorted(members))
        if candidate in blocked:
            continue
        blocked.add(candidate)
        samples.append(candidate)
    return tuple(samples), len(samples) < count


def build_candidate_set(
    positives: Sequence[NodeSet],
    negatives: Sequence[NodeSet],
    neg_type: str,
    multiplier: int,
    *,
    seed: int = 0,
    target_size: int | None = None,
    under_sampled: bool = False,
    hyperedges: Iterable[NodeSet] | None = None,
) -> CandidateSet:
    """Assemble a CandidateSet, checking every invariant by name.

    When ``hyperedges`` (the full original hyperedge collection) is given,
    membership constraints are verified: every positive must be one of them
    and no negative may be.
    """
    if neg_type not in NEGATIVE_TYPES:
        raise AssemblyError(f"neg_type must be one of {NEGATIVE_TYPES}, got {neg_type!r}")
    if multiplier < 1:
        raise AssemblyError(f"multiplier must be >= 1, got {multiplier}")
    pos = tuple(tuple(sorted(c)) for c in positives)
    neg = tuple(tuple(sorted(c)) for c in negatives)
    if not pos:
        raise AssemblyError("positives are empty")
    if target_size is None:
        target_size = len(pos[0])
    for side, candidates in (("positive", pos), ("negative", neg)):
        for c in candidates:
            if len(set(c)) != target_size:
                raise AssemblyError(
                    f"{side} candidate {c} does not have cardinality {target_size}"
                )
    if len(set(pos)) != len(pos):
        raise AssemblyError("duplicate positive candidates")
    if len(set(neg)) != len(neg):
        raise AssemblyError("duplicate negative candidates")
    overlap = set(pos) & set(neg)
    if overlap:
        raise AssemblyError(f"candidates appear on both sides: {sorted(overlap)[:3]}")
    if hyperedges is not None:
        edge_set = set(tuple(sorted(e)) for e in hyperedges)
        missing = [c for c in pos if c not in edge_set]
        if missing:
            raise AssemblyError(
                f"positives not in the original hyperedge set: {missing[:3]}"
            )
        leaked = [c for c in neg if c in edge_set]
        if leaked:
            raise AssemblyError(
                f"negatives present in the original hyperedge set: {leaked[:3]}"
            )
    if not under_sampled and len(neg) != multiplier * len(pos):
        raise AssemblyError(
            f"expected {multiplier * len(pos)} negatives, got {len(neg)} "
            "(pass under_sampled=True if the sampler fell short)"
        )
    return CandidateSet(
        target_size=target_size,
        positives=pos,
        negatives=neg,
        neg_type=neg_type,
        multiplier=multiplier,
        seed=seed,
        under_sampled=under_sampled,
    )


def train_test_split(
    candidate_set: CandidateSet, train_frac: float = 0.5, seed: int = 0
) -> tuple[CandidateSet, CandidateSet]:
    """Stratified split: positives and negatives split independently.

    Both classes keep their ratio up to rounding; each side must have at
    least 2 members so neither half is empty.
    """
    if not 0 < train_frac < 1:
        raise ValueError(f"train_frac must be in (0, 1), got {train_frac}")
    if len(candidate_set.positives) < 2:
        raise SplitError("need at least 2 positives to split")
    if len(candidate_set.negatives) < 2:
        raise SplitError("need at least 2 negatives to split")
    rng = random.Random(seed)

    def halves(items: Sequence[NodeSet]) -> tuple[tuple[NodeSet, ...], tuple[NodeSet, ...]]:
        shuffled = list(items)
        rng.shuffle(shuffled)
        k = min(max(round(train_frac * len(shuffled)), 1), len(shuffled) - 1)
        return tuple(shuffled[:k]), tuple(shuffled[k:])

    pos_train, pos_test = halves(candidate_set.positives)
    neg_train, neg_test = halves(candidate_set.negatives)
    train = replace(candidate_set, positives=pos_train, negatives=neg_train)
    test = replace(candidate_set, positives=pos_test, negatives=neg_test)
    return train, test
