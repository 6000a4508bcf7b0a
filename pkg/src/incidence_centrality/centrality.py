"""Vertex, edge, hub/authority and hypergraph centralities from incidence SVDs."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GraphError
from .graph import DirectedGraph, Hypergraph, build_hypergraph_incidence, build_incidence
from .spectral import (
    RegularizationConfig,
    SpectralDecomposition,
    decompose,
    pseudoinverse_diagonal,
)

__all__ = [
    "CentralityReport",
    "vertex_centrality",
    "edge_centrality",
    "normalize_scores",
    "hub_authority",
    "graph_centralities",
    "hypergraph_centralities",
    "ranking",
    "rankings_agree",
]

DEFAULT_ALPHA = 0.5


@dataclass(eq=False)
class CentralityReport:
    """Raw and normalized centralities for one graph or hypergraph.

    Raw values ``c_v``/``c_e`` are resistance-like (smaller is more central);
    ``s_*`` are the inverted, max-normalized scores (larger is more central).
    ``s_hub``/``s_auth`` are ``None`` when no orientation-aware aggregation
    was requested or the input is a hypergraph.
    """

    c_v: np.ndarray
    c_e: np.ndarray
    s_v: np.ndarray
    s_e: np.ndarray
    s_hub: np.ndarray | None
    s_auth: np.ndarray | None
    params: dict
    vertex_labels: tuple[str, ...] = ()
    edge_members: tuple[tuple[int, ...], ...] = ()
    kind: str = "graph"
    extra: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.c_v)

    @property
    def m(self) -> int:
        return len(self.c_e)


def vertex_centrality(d: SpectralDecomposition, cfg: RegularizationConfig) -> np.ndarray:
    """``C_v(i) = sum_k u_{k,i}**2 / w_k``; equals ``[L0^+]_ii`` when unregularized."""
    return pseudoinverse_diagonal(d, "vertex", cfg)


def edge_centrality(d: SpectralDecomposition, cfg: RegularizationConfig) -> np.ndarray:
    """``C_e(e) = sum_k v_{k,e}**2 / w_k``; equals ``[L1^+]_ee`` when unregularized."""
    return pseudoinverse_diagonal(d, "edge", cfg)


def normalize_scores(c, tau: float = 1e-8) -> np.ndarray:
    """Invert and max-normalize: ``(1 / (c + tau)) / max(1 / (c + tau))``."""
    c = np.asarray(c, dtype=float)
    if c.size == 0:
        return np.zeros(0)
    if np.any(c < 0):
        raise ValueError("centralities must be non-negative")
    inv = 1.0 / (c + tau)
    return inv / inv.max()


def _max_normalize(x: np.ndarray) -> np.ndarray:
    top = x.max() if x.size else 0.0
    return x / top if top > 0 else x


def hub_authority(g: DirectedGraph, s_v, s_e, alpha: float = DEFAULT_ALPHA) -> tuple[np.ndarray, np.ndarray]:
    """Blend vertex scores with edge scores summed over out-/in-edges.

    Returns ``(s_hub, s_auth)`` where, before max-normalization,
    ``hub = alpha * s_v + (1 - alpha) * I_out @ s_e`` and
    ``auth = alpha * s_v + (1 - alpha) * I_in @ s_e``.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    s_v = np.asarray(s_v, dtype=float)
    s_e = np.asarray(s_e, dtype=float)
    if s_v.shape != (g.n,) or s_e.shape != (g.m,):
        raise ValueError(f"score shapes {s_v.shape}, {s_e.shape} do not match graph (n={g.n}, m={g.m})")
    out_sum = np.zeros(g.n)
    in_sum = np.zeros(g.n)
    if g.m:
        edges = np.asarray(g.edges)
        np.add.at(out_sum, edges[:, 0], s_e)
        np.add.at(in_sum, edges[:, 1], s_e)
    hub = alpha * s_v + (1.0 - alpha) * out_sum
    auth = alpha * s_v + (1.0 - alpha) * in_sum
    return _max_normalize(hub), _max_normalize(auth)


def _params(cfg, alpha, k, aggregate):
    return {
        "regularization": cfg.as_dict(),
        "alpha": alpha,
        "truncation_k": k,
        "aggregate": aggregate,
    }


def graph_centralities(
    g: DirectedGraph,
    cfg: RegularizationConfig | None = None,
    alpha: float | None = DEFAULT_ALPHA,
    k: int | None = None,
    aggregate: str = "normalized",
    rank_tol: float | None = None,
) -> CentralityReport:
    """Full pipeline on a directed graph: incidence, SVD, centralities, hub/authority.

    ``alpha=None`` skips the hub/authority step. ``aggregate="raw"`` feeds
    ``c_v``/``c_e`` into the blend instead of the normalized scores.
    """
    cfg = cfg or RegularizationConfig()
    if aggregate not in ("normalized", "raw"):
        raise ValueError(f"aggregate must be 'normalized' or 'raw', got {aggregate!r}")
    b = build_incidence(g)
    d = decompose(b, cfg, k=k, rank_tol=rank_tol)
    c_v = vertex_centrality(d, cfg)
    c_e = edge_centrality(d, cfg)
    s_v = normalize_scores(c_v, cfg.tau)
    s_e = normalize_scores(c_e, cfg.tau)
    s_hub = s_auth = None
    if alpha is not None:
        if aggregate == "normalized":
            s_hub, s_auth = hub_authority(g, s_v, s_e, alpha)
        else:
            s_hub, s_auth = hub_authority(g, c_v, c_e, alpha)
    return CentralityReport(
        c_v=c_v,
        c_e=c_e,
        s_v=s_v,
        s_e=s_e,
        s_hub=s_hub,
        s_auth=s_auth,
        params=_params(cfg, alpha, k, aggregate),
        vertex_labels=tuple(g.label(i) for i in range(g.n)),
        edge_members=g.edges,
        kind="graph",
        extra={"numerical_rank": d.numerical_rank, "frobenius_tail": d.frobenius_tail},
    )


def hypergraph_centralities(
    h: Hypergraph,
    cfg: RegularizationConfig | None = None,
    k: int | None = None,
    rank_tol: float | None = None,
) -> CentralityReport:
    """Vertex and hyperedge centralities from the binary incidence matrix."""
    cfg = cfg or RegularizationConfig()
    if h.n == 0 and h.m:
        raise GraphError("hyperedges without vertices")
    b = build_hypergraph_incidence(h)
    d = decompose(b, cfg, k=k, rank_tol=rank_tol)
    c_v = vertex_centrality(d, cfg)
    c_e = edge_centrality(d, cfg)
    return CentralityReport(
        c_v=c_v,
        c_e=c_e,
        s_v=normalize_scores(c_v, cfg.tau),
        s_e=normalize_scores(c_e, cfg.tau),
        s_hub=None,
        s_auth=None,
        params=_params(cfg, None, k, "normalized"),
        vertex_labels=tuple(h.label(i) for i in range(h.n)),
        edge_members=tuple(tuple(sorted(e)) for e in h.hyperedges),
        kind="hypergraph",
        extra={"numerical_rank": d.numerical_rank, "frobenius_tail": d.frobenius_tail},
    )


def ranking(scores, descending: bool = True) -> np.ndarray:
    """Indices ordered by score; ties broken by ascending index."""
    scores = np.asarray(scores, dtype=float)
    key = -scores if descending else scores
    return np.lexsort((np.arange(len(scores)), key))


def rankings_agree(ascending, descending, tol: float = 1e-10) -> bool:
    """True when ordering by ``ascending`` (small first) matches ordering by
    ``descending`` (large first), treating values within ``tol`` (relative to
    the vector's scale) as tied."""
    a = np.asarray(ascending, dtype=float)
    b = np.asarray(descending, dtype=float)
    if a.shape != b.shape:
        raise ValueError("rankings of different lengths")

    def signs(x):
        diff = x[None, :] - x[:, None]
        scale = max(np.abs(x).max(), 1e-300) if x.size else 1.0
        out = np.sign(diff)
        out[np.abs(diff) <= tol * scale] = 0
        return out

    return bool(np.array_equal(signs(a), -signs(b)))
