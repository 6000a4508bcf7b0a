"""Compact, truncated and regularized SVDs of incidence matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import svds

from .errors import SpectralError
from .graph import IncidenceMatrix

__all__ = [
    "RegularizationConfig",
    "SpectralDecomposition",
    "compact_svd",
    "truncated_svd",
    "regularize_incidence",
    "rectangular_identity",
    "pseudoinverse_diagonal",
    "decompose",
]

# Dense LAPACK below this many entries, ARPACK for truncated sparse problems above.
DENSE_ENTRY_LIMIT = 10**6

MODES = ("matrix_level", "tikhonov", "none")
_MODE_ALIASES = {"matrix": "matrix_level", "matrix-level": "matrix_level"}


@dataclass(frozen=True)
class RegularizationConfig:
    """How the spectrum is stabilised before inverting.

    ``matrix_level`` decomposes ``sqrt(lam) * B + sqrt(1 - lam) * I`` instead
    of ``B``. ``tikhonov`` decomposes ``B`` and uses ``sigma**2 + tau`` as the
    inverse weights. ``tau`` is also the offset used by score normalization.

    The default is ``tikhonov``: the main-diagonal ``I`` of ``matrix_level``
    is tied to vertex and edge order, so that mode is neither orientation-
    invariant nor symmetric under graph automorphisms.
    """

    mode: str = "tikhonov"
    lam: float = 0.99
    tau: float = 1e-8

    def __post_init__(self):
        mode = _MODE_ALIASES.get(self.mode, self.mode)
        if mode not in MODES:
            raise SpectralError(f"unknown regularization mode {self.mode!r}; expected one of {MODES}")
        object.__setattr__(self, "mode", mode)
        if not 0.0 <= self.lam <= 1.0:
            raise SpectralError(f"lambda must lie in [0, 1], got {self.lam}")
        if not self.tau > 0.0:
            raise SpectralError(f"tau must be positive, got {self.tau}")

    def as_dict(self) -> dict:
        return {"mode": self.mode, "lambda": self.lam, "tau": self.tau}


UNREGULARIZED = RegularizationConfig(mode="none", lam=1.0)


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Compact SVD ``B ~= U diag(sigma) V^T`` restricted to positive singular values."""

    U: np.ndarray
    sigma: np.ndarray
    V: np.ndarray
    shape: tuple[int, int]
    truncated_to: int | None = None
    frobenius_tail: float = 0.0

    @property
    def numerical_rank(self) -> int:
        return len(self.sigma)

    @property
    def n(self) -> int:
        return self.shape[0]

    @property
    def m(self) -> int:
        return self.shape[1]

    def reconstruct(self) -> np.ndarray:
        return (self.U * self.sigma) @ self.V.T

    def truncate(self, k: int) -> "SpectralDecomposition":
        if k < 1:
            raise SpectralError(f"truncation rank must be >= 1, got {k}")
        k = min(k, self.numerical_rank)
        tail = float(np.sqrt(np.sum(self.sigma[k:] ** 2)))
        return SpectralDecomposition(
            self.U[:, :k], self.sigma[:k], self.V[:, :k], self.shape, truncated_to=k, frobenius_tail=tail
        )


def _as_matrix(b):
    if isinstance(b, IncidenceMatrix):
        b = b.values
    if sp.issparse(b):
        b = b.tocsc().astype(float)
        if not np.all(np.isfinite(b.data)):
            raise SpectralError("matrix has non-finite entries")
        return b
    b = np.asarray(b, dtype=float)
    if b.ndim != 2:
        raise SpectralError(f"expected a 2-d matrix, got shape {b.shape}")
    if not np.all(np.isfinite(b)):
        raise SpectralError("matrix has non-finite entries")
    return b


def _empty(shape):
    n, m = shape
    return SpectralDecomposition(np.zeros((n, 0)), np.zeros(0), np.zeros((m, 0)), (n, m))


def _fix_signs(U, V):
    # Largest-magnitude entry of each u_k made positive; lowest index wins near-ties.
    for k in range(U.shape[1]):
        a = np.abs(U[:, k])
        i = int(np.flatnonzero(a >= a.max() - 1e-12)[0])
        if U[i, k] < 0:
            U[:, k] *= -1
            V[:, k] *= -1
    return U, V


def _cutoff(sigma_max, shape, rank_tol):
    if rank_tol is None:
        rank_tol = np.finfo(float).eps
    return rank_tol * sigma_max * max(shape)


def compact_svd(b, rank_tol: float | None = None) -> SpectralDecomposition:
    """Compact SVD keeping only singular values above the numerical-rank cutoff.

    A singular value is kept iff ``sigma > rank_tol * sigma_1 * max(n, m)``;
    ``rank_tol`` defaults to machine epsilon.
    """
    b = _as_matrix(b)
    shape = b.shape
    if 0 in shape:
        return _empty(shape)
    dense = b.toarray() if sp.issparse(b) else b
    U, s, Vt = np.linalg.svd(dense, full_matrices=False)
    if s[0] == 0.0:
        return _empty(shape)
    keep = s > _cutoff(s[0], shape, rank_tol)
    U, V = _fix_signs(U[:, keep].copy(), Vt[keep].T.copy())
    return SpectralDecomposition(U, s[keep].copy(), V, shape)


def truncated_svd(b, k: int, rank_tol: float | None = None) -> SpectralDecomposition:
    """Top ``min(k, r)`` singular triplets and the Frobenius norm of the rest.

    Small or dense inputs go through the compact decomposition. Large sparse
    inputs use ARPACK on the top ``k`` triplets; the discarded energy then
    comes from ``||B||_F**2 - sum(sigma_i**2)``.
    """
    if k < 1:
        raise SpectralError(f"truncation rank must be >= 1, got {k}")
    b = _as_matrix(b)
    n, m = b.shape
    if 0 in b.shape:
        return _empty(b.shape)
    if not sp.issparse(b) or n * m <= DENSE_ENTRY_LIMIT or k >= min(n, m) - 1:
        return compact_svd(b, rank_tol).truncate(k)
    # fixed start vector for reproducibility; all-ones would lie in ker(B^T)
    v0 = np.random.default_rng(0).standard_normal(min(n, m))
    U, s, Vt = svds(b, k=k, v0=v0)
    order = np.argsort(s)[::-1]
    U, s, Vt = U[:, order], s[order], Vt[order]
    keep = s > _cutoff(s[0], b.shape, rank_tol)
    U, V = _fix_signs(U[:, keep].copy(), Vt[keep].T.copy())
    s = s[keep].copy()
    total = float(b.multiply(b).sum())
    tail = float(np.sqrt(max(total - np.sum(s**2), 0.0)))
    return SpectralDecomposition(U, s, V, b.shape, truncated_to=len(s), frobenius_tail=tail)


def rectangular_identity(n: int, m: int, sparse: bool = False):
    """``n x m`` matrix with ones at ``(i, i)`` for ``i < min(n, m)``."""
    return sp.eye(n, m, format="csc") if sparse else np.eye(n, m)


def regularize_incidence(b, cfg: RegularizationConfig):
    """``sqrt(lam) * B + sqrt(1 - lam) * I_nm`` for matrix-level regularization."""
    if cfg.mode != "matrix_level":
        raise SpectralError(f"matrix-level regularization requested with mode {cfg.mode!r}")
    b = _as_matrix(b)
    n, m = b.shape
    eye = rectangular_identity(n, m, sparse=sp.issparse(b))
    if cfg.lam == 1.0:
        return b.copy()
    return np.sqrt(cfg.lam) * b + np.sqrt(1.0 - cfg.lam) * eye


def decompose(b, cfg: RegularizationConfig, k: int | None = None, rank_tol: float | None = None) -> SpectralDecomposition:
    """Decompose ``B`` (or its matrix-level regularization) as ``cfg`` asks."""
    target = regularize_incidence(b, cfg) if cfg.mode == "matrix_level" else b
    if k is None:
        return compact_svd(target, rank_tol)
    return truncated_svd(target, k, rank_tol)


def _weights(d: SpectralDecomposition, cfg: RegularizationConfig) -> np.ndarray:
    w = d.sigma**2
    if cfg.mode == "tikhonov":
        w = w + cfg.tau
    return w


def pseudoinverse_diagonal(d: SpectralDecomposition, side: str, cfg: RegularizationConfig = UNREGULARIZED) -> np.ndarray:
    """Diagonal of ``L0^+`` (``side="vertex"``) or ``L1^+`` (``side="edge"``).

    Computed as ``sum_k x_k**2 / w_k`` over the retained modes, with
    ``w_k = sigma_k**2``, or ``sigma_k**2 + tau`` in tikhonov mode.
    """
    if side == "vertex":
        X = d.U
    elif side == "edge":
        X = d.V
    else:
        raise SpectralError(f"side must be 'vertex' or 'edge', got {side!r}")
    if X.shape[0] == 0:
        return np.zeros(0)
    return (X**2) @ (1.0 / _weights(d, cfg))
