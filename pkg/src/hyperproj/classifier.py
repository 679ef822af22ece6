"""L2-regularized logistic regression, trained full-batch with Newton steps.

The objective is mean logistic loss plus (l2_strength / 2) * ||w||^2 with an
unpenalized bias. Optimization is deterministic: zero initialization, damped
Newton steps with backtracking, stop when the gradient max-norm drops below
``tol``. Feature columns are z-scored with train statistics by default;
constant columns pass through unchanged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np


@dataclass(frozen=True)
class Standardization:
    means: np.ndarray
    stds: np.ndarray

    def to_dict(self) -> dict:
        return {"means": self.means.tolist(), "stds": self.stds.tolist()}

    @classmethod
    def from_dict(cls, payload: dict) -> "Standardization":
        return cls(
            means=np.asarray(payload["means"], dtype=np.float64),
            stds=np.asarray(payload["stds"], dtype=np.float64),
        )

    @classmethod
    def identity(cls, n_columns: int) -> "Standardization":
        return cls(means=np.zeros(n_columns), stds=np.ones(n_columns))


def standardize_fit(matrix: np.ndarray) -> Standardization:
    """Per-column mean/std from a train matrix; constant columns stay as-is."""
    X = np.asarray(matrix, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] == 0:
        raise ValueError("expected a non-empty 2-D matrix")
    means = X.mean(axis=0)
    stds = X.std(axis=0)
    constant = stds == 0
    means = np.where(constant, 0.0, means)
    stds = np.where(constant, 1.0, stds)
    return Standardization(means=means, stds=stds)


def standardize_apply(params: Standardization, matrix: np.ndarray) -> np.ndarray:
    X = np.asarray(matrix, dtype=np.float64)
    return (X - params.means) / params.stds


@dataclass
class LogRegModel:
    weights: np.ndarray
    bias: float
    l2_strength: float
    standardization: Standardization
    converged: bool
    n_iter: int

    def to_json(self) -> str:
        payload = {
            "weights": self.weights.tolist(),
            "bias": self.bias,
            "l2_strength": self.l2_strength,
            "standardization": self.standardization.to_dict(),
            "converged": self.converged,
            "n_iter": self.n_iter,
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "LogRegModel":
        payload = json.loads(text)
        return cls(
            weights=np.asarray(payload["weights"], dtype=np.float64),
            bias=float(payload["bias"]),
            l2_strength=float(payload["l2_strength"]),
            standardization=Standardization.from_dict(payload["standardization"]),
            converged=bool(payload["converged"]),
            n_iter=int(payload["n_iter"]),
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json() + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "LogRegModel":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z, dtype=np.float64)
    positive = z >= 0
    out[positive] = 1.0 / (1.0 + np.exp(-z[positive]))
    ez = np.exp(z[~positive])
    out[~positive] = ez / (1.0 + ez)
    return out


def _loss(Z: np.ndarray, y: np.ndarray, w: np.ndarray, b: float, l2: float) -> float:
    z = Z @ w + b
    # log(1 + e^z) - y*z is the per-row logistic loss for labels in {0,1}
    return float(np.mean(np.logaddexp(0.0, z) - y * z) + 0.5 * l2 * (w @ w))


def train_logreg(
    X: np.ndarray,
    y: np.ndarray,
    l2_strength: float = 1.0,
    tol: float = 1e-8,
    max_iter: int = 10_000,
    seed: int | None = None,
    *,
    standardize: bool = True,
) -> LogRegModel:
    """Fit the model; deterministic given inputs (``seed`` is accepted for
    call-site uniformity but unused, the solver has no stochastic component).

    Returns with ``converged=False`` when the gradient criterion was not met
    within ``max_iter`` Newton steps.
    """
    del seed
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64).ravel()
    if X.ndim != 2:
        raise ValueError("X must be 2-D")
    if X.shape[0] != y.shape[0]:
        raise ValueError("X and y row counts differ")
    if not np.isfinite(X).all():
        raise ValueError("X contains non-finite values")
    if not np.isin(y, (0.0, 1.0)).all():
        raise ValueError("labels must be 0 or 1")
    if l2_strength <= 0:
        raise ValueError("l2_strength must be positive")
    n, d = X.shape
    params = standardize_fit(X) if standardize else Standardization.identity(d)
    Z = standardize_apply(params, X)
    w = np.zeros(d)
    b = 0.0
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        z = Z @ w + b
        p = _sigmoid(z)
        residual = p - y
        grad_w = Z.T @ residual / n + l2_strength * w
        grad_b = float(residual.mean())
        gradient = np.append(grad_w, grad_b)
        if np.max(np.abs(gradient)) < tol:
            converged = True
            break
        s = p * (1.0 - p)
        hessian = np.zeros((d + 1, d + 1))
        hessian[:d, :d] = (Z.T * s) @ Z / n + l2_strength * np.eye(d)
        cross = Z.T @ s / n
        hessian[:d, d] = cross
        hessian[d, :d] = cross
        hessian[d, d] = s.mean()
        hessian[np.diag_indices(d + 1)] += 1e-12
        try:
            step = np.linalg.solve(hessian, gradient)
        except np.linalg.LinAlgError:
            step = np.linalg.lstsq(hessian, gradient, rcond=None)[0]
        current = _loss(Z, y, w, b, l2_strength)
        descent = float(gradient @ step)
        t = 1.0
        while t > 2**-40:
            w_try = w - t * step[:d]
            b_try = b - t * step[d]
            if _loss(Z, y, w_try, b_try, l2_strength) <= current - 1e-4 * t * descent:
                break
            t *= 0.5
        w = w - t * step[:d]
        b = b - t * step[d]
    return LogRegModel(
        weights=w,
        bias=float(b),
        l2_strength=l2_strength,
        standardization=params,
        converged=converged,
        n_iter=iterations,
    )


def predict_scores(model: LogRegModel, X: np.ndarray) -> np.ndarray:
    """Sigmoid of the affine score per row, after stored standardization."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != model.weights.shape[0]:
        raise ValueError(
            f"expected {model.weights.shape[0]} feature columns, got "
            f"{X.shape[1] if X.ndim == 2 else 'non-2D input'}"
        )
    Z = standardize_apply(model.standardization, X)
    return _sigmoid(Z @ model.weights + model.bias)
