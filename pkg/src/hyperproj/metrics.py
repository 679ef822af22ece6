"""Ranking and correlation metrics: AUC-PR, Pearson, percent gain."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UndefinedMetricError


@dataclass(frozen=True)
class PRResult:
    auc_pr: float
    curve: tuple[tuple[float, float], ...]  # (recall, precision) per threshold
    positives: int
    total: int


def auc_pr(scores, labels) -> PRResult:
    """Average-precision AUC-PR with tied scores grouped at one threshold.

    Sorts by score descending; at each distinct score value k the curve gains
    the point (R_k, P_k) and the area gains (R_k - R_{k-1}) * P_k. Grouping
    ties makes the result invariant to the input ordering.
    """
    s = np.asarray(scores, dtype=np.float64).ravel()
    y = np.asarray(labels).ravel().astype(np.int64)
    if s.shape != y.shape:
        raise ValueError("scores and labels must have equal length")
    if not np.isin(y, (0, 1)).all():
        raise ValueError("labels must be 0 or 1")
    positives = int(y.sum())
    total = int(y.size)
    if positives == 0 or positives == total:
        raise UndefinedMetricError(
            "AUC-PR needs at least one positive and one negative label"
        )
    order = np.argsort(-s, kind="mergesort")
    s_sorted = s[order]
    y_sorted = y[order]
    tp = np.cumsum(y_sorted)
    ranks = np.arange(1, total + 1)
    # last index of each tied-score group
    group_end = np.nonzero(np.append(s_sorted[1:] != s_sorted[:-1], True))[0]
    recalls = tp[group_end] / positives
    precisions = tp[group_end] / ranks[group_end]
    previous = np.concatenate(([0.0], recalls[:-1]))
    area = float(np.sum((recalls - previous) * precisions))
    curve = tuple(zip(recalls.tolist(), precisions.tolist()))
    return PRResult(auc_pr=area, curve=curve, positives=positives, total=total)


def pearson(xs, ys) -> float:
    """Sample Pearson correlation; undefined when either variance is zero."""
    x = np.asarray(xs, dtype=np.float64).ravel()
    y = np.asarray(ys, dtype=np.float64).ravel()
    if x.shape != y.shape:
        raise ValueError("sequences must have equal length")
    if x.size < 2:
        raise ValueError("need at least 2 points")
    dx = x - x.mean()
    dy = y - y.mean()
    vx = float(dx @ dx)
    vy = float(dy @ dy)
    if vx == 0.0 or vy == 0.0:
        raise UndefinedMetricError("correlation undefined for zero variance")
    return float((dx @ dy) / np.sqrt(vx * vy))


def percent_gain(auc_lo: float, auc_hi: float) -> float:
    """Percentage improvement from ``auc_lo`` to ``auc_hi``."""
    if auc_lo <= 0:
        raise UndefinedMetricError("gain undefined for a non-positive base value")
    return 100.0 * (auc_hi - auc_lo) / auc_lo
