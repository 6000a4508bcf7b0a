"""Brute-force reference computations used to check the spectral pipeline.

Nothing in here goes through the incidence SVD except the functions that
take a :class:`SpectralDecomposition` explicitly. The Laplacian pseudoinverse
is built from an adjacency count matrix and a symmetric eigensolver.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedGraphError, GraphError, UndefinedCorrelation
from .graph import DirectedGraph, connected_components
from .spectral import SpectralDecomposition

__all__ = [
    "ResistanceMatrix",
    "BetweennessResult",
    "laplacian",
    "laplacian_pseudoinverse",
    "resistance_matrix",
    "effective_resistance",
    "svd_resistance_matrix",
    "check_resistance_sum_identity",
    "current_flow_closeness",
    "betweenness",
    "pearson",
    "rayleigh_energy_residuals",
]


@dataclass(frozen=True, eq=False)
class ResistanceMatrix:
    """Symmetric matrix of pairwise effective resistances, zero on the diagonal."""

    values: np.ndarray

    def __getitem__(self, ij):
        return self.values[ij]

    @property
    def n(self) -> int:
        return self.values.shape[0]


def laplacian(g: DirectedGraph) -> np.ndarray:
    """Combinatorial Laplacian ``D - A`` of the underlying undirected multigraph."""
    A = np.zeros((g.n, g.n))
    for t, h in g.edges:
        A[t, h] += 1.0
        A[h, t] += 1.0
    return np.diag(A.sum(axis=1)) - A


def laplacian_pseudoinverse(g: DirectedGraph) -> np.ndarray:
    """Moore-Penrose pseudoinverse of the Laplacian via a dense eigendecomposition."""
    L = laplacian(g)
    if g.n == 0:
        return L
    evals, evecs = np.linalg.eigh(L)
    top = max(abs(evals[-1]), 0.0)
    keep = evals > np.finfo(float).eps * top * g.n
    Q = evecs[:, keep]
    return (Q / evals[keep]) @ Q.T


def _component_ids(g: DirectedGraph) -> np.ndarray:
    comp = np.empty(g.n, dtype=int)
    for c, members in enumerate(connected_components(g)):
        comp[members] = c
    return comp


def resistance_matrix(g: DirectedGraph) -> ResistanceMatrix:
    """All-pairs effective resistance; pairs in different components get ``inf``."""
    P = laplacian_pseudoinverse(g)
    d = np.diag(P)
    R = d[:, None] + d[None, :] - 2.0 * P
    R = 0.5 * (R + R.T)
    np.fill_diagonal(R, 0.0)
    np.maximum(R, 0.0, out=R)
    comp = _component_ids(g)
    R[comp[:, None] != comp[None, :]] = np.inf
    return ResistanceMatrix(R)


def _in_range(d: SpectralDecomposition, x: np.ndarray) -> bool:
    resid = x - d.U @ (d.U.T @ x)
    return np.linalg.norm(resid) <= 1e-8 * max(1.0, np.linalg.norm(x))


def effective_resistance(d: SpectralDecomposition, i: int, j: int) -> float:
    """``R_ij = sum_k (u_{k,i} - u_{k,j})**2 / sigma_k**2`` from an unregularized SVD.

    Returns 0 for ``i == j`` and ``inf`` when ``e_i - e_j`` is outside the
    range of ``B`` (the two vertices lie in different components).
    """
    if i == j:
        return 0.0
    x = np.zeros(d.n)
    x[i], x[j] = 1.0, -1.0
    if not _in_range(d, x):
        return float("inf")
    diff = d.U[i] - d.U[j]
    return float(np.sum(diff**2 / d.sigma**2))


def svd_resistance_matrix(d: SpectralDecomposition) -> ResistanceMatrix:
    """All pairs of :func:`effective_resistance` in one pass (connected graphs only)."""
    W = d.U / d.sigma
    sq = np.sum(W**2, axis=1)
    R = sq[:, None] + sq[None, :] - 2.0 * W @ W.T
    R = 0.5 * (R + R.T)
    np.fill_diagonal(R, 0.0)
    return ResistanceMatrix(np.maximum(R, 0.0))


def check_resistance_sum_identity(d: SpectralDecomposition) -> np.ndarray:
    """Per-vertex residual of ``sum_j R_ij = n * C_v(i) + tr(L0^+)``.

    ``d`` must be the unregularized decomposition of a connected graph's
    oriented incidence matrix. The left side sums the pairwise quadratic
    forms, the right side uses the pseudoinverse diagonal and trace.
    """
    n = d.n
    if n == 0:
        return np.zeros(0)
    if d.numerical_rank != n - 1:
        raise DisconnectedGraphError(
            f"identity requires a connected graph; rank {d.numerical_rank} != n - 1 = {n - 1}"
        )
    inv = 1.0 / d.sigma**2
    lhs = np.empty(n)
    for i in range(n):
        lhs[i] = np.sum(((d.U[i] - d.U) ** 2) @ inv)
    c_v = (d.U**2) @ inv
    rhs = n * c_v + np.sum(inv)
    return np.abs(lhs - rhs)


def current_flow_closeness(g: DirectedGraph) -> np.ndarray:
    """``(n - 1) / sum_{j != i} R_ij`` with edge directions ignored."""
    if g.n == 0:
        return np.zeros(0)
    if len(connected_components(g)) != 1:
        raise DisconnectedGraphError("current-flow closeness needs a connected graph")
    if g.n == 1:
        return np.zeros(1)
    R = resistance_matrix(g).values
    return (g.n - 1) / R.sum(axis=1)


@dataclass(frozen=True, eq=False)
class BetweennessResult:
    values: np.ndarray
    target: str
    directed: bool
    normalization: str


def _adjacency(g: DirectedGraph, directed: bool):
    adj = [[] for _ in range(g.n)]
    for j, (t, h) in enumerate(g.edges):
        adj[t].append((h, j))
        if not directed:
            adj[h].append((t, j))
    return adj


def betweenness(g: DirectedGraph, target: str = "node", respect_direction: bool = True, normalized: bool = True) -> BetweennessResult:
    """Shortest-path betweenness by Brandes' BFS accumulation.

    Every ordered source/target pair contributes; equally short paths share
    credit fractionally and parallel edges count as distinct paths. For
    undirected runs each unordered pair is counted once. Normalization
    divides node scores by ``(n-1)(n-2)`` and edge scores by ``n(n-1)``,
    halved for undirected runs.
    """
    if target not in ("node", "edge"):
        raise GraphError(f"target must be 'node' or 'edge', got {target!r}")
    n = g.n
    adj = _adjacency(g, respect_direction)
    node_b = np.zeros(n)
    edge_b = np.zeros(g.m)
    for s in range(n):
        order = []
        preds = [[] for _ in range(n)]
        sigma = np.zeros(n)
        dist = np.full(n, -1)
        sigma[s], dist[s] = 1.0, 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w, j in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append((v, j))
        delta = np.zeros(n)
        for w in reversed(order):
            for v, j in preds[w]:
                c = sigma[v] / sigma[w] * (1.0 + delta[w])
                edge_b[j] += c
                delta[v] += c
            if w != s:
                node_b[w] += delta[w]
    if not respect_direction:
        node_b /= 2.0
        edge_b /= 2.0
    if target == "node":
        values, pairs, label = node_b, (n - 1) * (n - 2), "(n-1)(n-2)"
    else:
        values, pairs, label = edge_b, n * (n - 1), "n(n-1)"
    if normalized:
        if not respect_direction:
            pairs, label = pairs / 2.0, label + "/2"
        if pairs > 0:
            values = values / pairs
        normalization = f"divided by {label}"
    else:
        normalization = "none"
    return BetweennessResult(values, target, respect_direction, normalization)


def pearson(x, y) -> float:
    """Sample Pearson correlation; raises :class:`UndefinedCorrelation` on constant input."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError(f"pearson expects two equal-length vectors, got {x.shape} and {y.shape}")
    if len(x) < 2:
        raise UndefinedCorrelation("pearson needs at least two observations")
    dx = x - x.mean()
    dy = y - y.mean()
    sx = np.sqrt(dx @ dx)
    sy = np.sqrt(dy @ dy)
    scale = max(np.abs(x).max(), np.abs(y).max(), 1.0)
    if sx <= 1e-12 * scale * np.sqrt(len(x)) or sy <= 1e-12 * scale * np.sqrt(len(y)):
        raise UndefinedCorrelation("pearson is undefined for a constant vector")
    return float(np.clip((dx @ dy) / (sx * sy), -1.0, 1.0))


def rayleigh_energy_residuals(d: SpectralDecomposition, b) -> np.ndarray:
    """``| ||B^T u_k||^2 - sigma_k^2 ||u_k||^2 |`` for every retained mode."""
    b = b.dense() if hasattr(b, "dense") else np.asarray(b, dtype=float)
    flows = b.T @ d.U
    return np.abs(np.sum(flows**2, axis=0) - d.sigma**2 * np.sum(d.U**2, axis=0))
