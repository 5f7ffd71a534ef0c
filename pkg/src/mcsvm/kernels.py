"""Kernel functions and a row-granular Gram cache shared by the solvers."""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass

import numpy as np

KERNEL_KINDS = ("linear", "rbf")


@dataclass(frozen=True)
class Kernel:
    """Kernel specification.

    kind is 'linear' (plain dot product) or 'rbf'
    (exp(-gamma * ||x - z||^2)); gamma is used only by 'rbf'.
    """

    kind: str = "rbf"
    gamma: float = 2.0

    def __post_init__(self):
        if self.kind not in KERNEL_KINDS:
            raise ValueError(
                f"unknown kernel kind {self.kind!r}; expected one of {KERNEL_KINDS}"
            )
        if self.kind == "rbf" and not self.gamma > 0:
            raise ValueError(f"rbf kernel requires gamma > 0, got {self.gamma}")


def kernel_eval(kernel: Kernel, x, z) -> float:
    """Evaluate k(x, z) for two feature vectors of equal dimension."""
    x = np.asarray(x, dtype=float)
    z = np.asarray(z, dtype=float)
    if x.shape != z.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {z.shape}")
    if kernel.kind == "linear":
        return float(np.dot(x, z))
    d = x - z
    return float(np.exp(-kernel.gamma * np.dot(d, d)))


def kernel_matrix(kernel: Kernel, X, Z=None) -> np.ndarray:
    """Kernel matrix K[i, j] = k(X[i], Z[j]); Z defaults to X."""
    X = np.asarray(X, dtype=float)
    Z = X if Z is None else np.asarray(Z, dtype=float)
    if X.ndim != 2 or Z.ndim != 2 or X.shape[1] != Z.shape[1]:
        raise ValueError(f"incompatible shapes {X.shape} and {Z.shape}")
    G = X @ Z.T
    if kernel.kind == "linear":
        return G
    sqx = np.einsum("ij,ij->i", X, X)
    sqz = np.einsum("ij,ij->i", Z, Z)
    d2 = sqx[:, None] + sqz[None, :] - 2.0 * G
    np.maximum(d2, 0.0, out=d2)  # clamp negative rounding dust
    return np.exp(-kernel.gamma * d2)


class GramCache:
    """LRU cache of Gram-matrix rows for one (kernel, data) pair.

    Rows are computed lazily; an eviction budget in bytes caps memory.
    `eval_count` counts scalar kernel evaluations actually performed, so
    cache hits are observable. Single-writer: concurrent solvers must
    each own their own instance.
    """

    def __init__(self, kernel: Kernel, X, max_bytes: int = 64 * 2**20):
        self.kernel = kernel
        self.X = np.ascontiguousarray(X, dtype=float)
        if self.X.ndim != 2:
            raise ValueError("data must be a 2-d matrix")
        self.n = self.X.shape[0]
        row_bytes = self.n * 8
        self.capacity = max(1, int(max_bytes) // row_bytes)
        self.eval_count = 0
        self._rows: OrderedDict[int, np.ndarray] = OrderedDict()
        if kernel.kind == "rbf":
            self._sq = np.einsum("ij,ij->i", self.X, self.X)

    def row(self, i: int) -> np.ndarray:
        """Row i of the Gram matrix, served from cache when available."""
        if not 0 <= i < self.n:
            raise IndexError(f"row index {i} out of range for {self.n} samples")
        row = self._rows.get(i)
        if row is not None:
            self._rows.move_to_end(i)
            return row
        row = self._compute(i)
        row.setflags(write=False)
        self.eval_count += self.n
        while len(self._rows) >= self.capacity:
            self._rows.popitem(last=False)
        self._rows[i] = row
        return row

    def _compute(self, i: int) -> np.ndarray:
        g = self.X @ self.X[i]
        if self.kernel.kind == "linear":
            return g
        d2 = self._sq + self._sq[i] - 2.0 * g
        np.maximum(d2, 0.0, out=d2)
        return np.exp(-self.kernel.gamma * d2)
