"""Input validation helpers shared by the estimators."""

from __future__ import annotations

import numpy as np
from sklearn.exceptions import NotFittedError


def check_features(X) -> np.ndarray:
    """Coerce X to a 2-d float64 array of finite values."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2:
        raise ValueError(f"expected a 2-d feature matrix, got shape {X.shape}")
    if X.shape[0] == 0:
        raise ValueError("feature matrix has no rows")
    if not np.isfinite(X).all():
        raise ValueError("feature matrix contains NaN or infinite values")
    return X


def check_vector(x, n_features: int) -> np.ndarray:
    """Coerce a single feature vector and check its dimension."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.shape[0] != n_features:
        raise ValueError(
            f"expected a feature vector of dimension {n_features}, got shape {x.shape}"
        )
    return x


def check_targets_pm1(y, n_samples: int) -> np.ndarray:
    """Validate binary targets: values in {-1, +1}, both present."""
    y = np.asarray(y)
    if y.shape != (n_samples,):
        raise ValueError(f"targets must have shape ({n_samples},), got {y.shape}")
    y = y.astype(float)
    if not np.isin(y, (-1.0, 1.0)).all():
        raise ValueError("binary targets must be -1 or +1")
    if not ((y > 0).any() and (y < 0).any()):
        raise ValueError("both target values must occur at least once")
    return y


def check_class_labels(y, n_samples: int) -> tuple[np.ndarray, int]:
    """Validate dense multiclass labels 0..M-1 with every class present.

    Returns the label array and the class count M.
    """
    y = np.asarray(y)
    if y.shape != (n_samples,):
        raise ValueError(f"labels must have shape ({n_samples},), got {y.shape}")
    if not np.issubdtype(y.dtype, np.integer):
        yf = np.asarray(y, dtype=float)
        if not (yf == np.round(yf)).all():
            raise ValueError("class labels must be integers")
        y = yf.astype(int)
    else:
        y = y.astype(int)
    m = int(y.max()) + 1 if y.size else 0
    present = np.unique(y)
    if y.min() < 0 or not np.array_equal(present, np.arange(m)):
        raise ValueError(
            "class labels must be dense integers 0..M-1 with every class present"
        )
    return y, m


def check_fitted(estimator, attribute: str) -> None:
    if not hasattr(estimator, attribute):
        raise NotFittedError(
            f"{type(estimator).__name__} is not fitted yet; call fit() first"
        )
