"""Directed graphs, hypergraphs and their incidence matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp

from .errors import GraphError

__all__ = [
    "DirectedGraph",
    "Hypergraph",
    "IncidenceMatrix",
    "build_incidence",
    "build_hypergraph_incidence",
    "flip_orientations",
    "connected_components",
    "cycle_rank",
    "DENSE_NNZ_THRESHOLD",
]

DENSE_NNZ_THRESHOLD = 10_000


@dataclass(frozen=True)
class DirectedGraph:
    """Vertices ``0..n-1`` and an ordered list of oriented edges ``(tail, head)``.

    Edge order is significant: edge ``j`` becomes column ``j`` of the
    incidence matrix. Parallel edges are allowed, self-loops are not.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        object.__setattr__(self, "edges", edges)
        for j, (t, h) in enumerate(edges):
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise GraphError(f"edge {j} ({t}, {h}) has an endpoint outside [0, {self.n})")
            if t == h:
                raise GraphError(f"edge {j} is a self-loop on vertex {t}")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n:
                raise GraphError(f"expected {self.n} labels, got {len(labels)}")
            object.__setattr__(self, "labels", labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def undirected(self) -> "DirectedGraph":
        """Same graph with every edge oriented from lower to higher index.

        Antiparallel and parallel pairs are kept as separate edges.
        """
        return DirectedGraph(self.n, tuple((min(t, h), max(t, h)) for t, h in self.edges), self.labels)

    def out_degree(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=int)
        for t, _ in self.edges:
            deg[t] += 1
        return deg

    def in_degree(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=int)
        for _, h in self.edges:
            deg[h] += 1
        return deg

    def relabel(self, perm: Sequence[int]) -> "DirectedGraph":
        """Move vertex ``i`` to position ``perm[i]``; edge order is preserved."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel expects a permutation of range(n)")
        labels = None
        if self.labels is not None:
            labels = [""] * self.n
            for i, p in enumerate(perm):
                labels[p] = self.labels[i]
        return DirectedGraph(self.n, tuple((perm[t], perm[h]) for t, h in self.edges), labels)


@dataclass(frozen=True)
class Hypergraph:
    """Vertices ``0..n-1`` and an ordered list of non-empty hyperedges."""

    n: int
    hyperedges: tuple[frozenset[int], ...] = ()
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        hyperedges = tuple(frozenset(int(v) for v in e) for e in self.hyperedges)
        object.__setattr__(self, "hyperedges", hyperedges)
        for j, e in enumerate(hyperedges):
            if not e:
                raise GraphError(f"hyperedge {j} is empty")
            bad = [v for v in e if not 0 <= v < self.n]
            if bad:
                raise GraphError(f"hyperedge {j} has members outside [0, {self.n}): {sorted(bad)}")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n:
                raise GraphError(f"expected {self.n} labels, got {len(labels)}")
            object.__setattr__(self, "labels", labels)

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)


@dataclass(frozen=True, eq=False)
class IncidenceMatrix:
    """An ``n x m`` incidence matrix together with its column provenance.

    ``values`` is a dense ``ndarray`` or a scipy sparse matrix, depending on
    the number of nonzeros. ``kind`` is ``"oriented"`` (graph, +/-1 entries)
    or ``"binary"`` (hypergraph, 0/1 entries).
    """

    values: np.ndarray | sp.spmatrix
    kind: str
    column_map: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in ("oriented", "binary"):
            raise GraphError(f"unknown incidence kind {self.kind!r}")
        if not self.column_map:
            object.__setattr__(self, "column_map", tuple(range(self.values.shape[1])))

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    @property
    def cols(self) -> int:
        return self.values.shape[1]

    @property
    def is_sparse(self) -> bool:
        return sp.issparse(self.values)

    def dense(self) -> np.ndarray:
        return self.values.toarray() if self.is_sparse else np.asarray(self.values, dtype=float)


def _store(rows, cols, vals, shape, dense_threshold):
    if len(vals) <= dense_threshold:
        out = np.zeros(shape)
        out[rows, cols] = vals
        return out
    return sp.csc_matrix((vals, (rows, cols)), shape=shape)


def build_incidence(g: DirectedGraph, dense_threshold: int = DENSE_NNZ_THRESHOLD) -> IncidenceMatrix:
    """Oriented incidence: column ``j`` has -1 at ``tail(j)`` and +1 at ``head(j)``."""
    m = g.m
    rows = np.empty(2 * m, dtype=int)
    cols = np.repeat(np.arange(m), 2)
    vals = np.tile([-1.0, 1.0], m)
    for j, (t, h) in enumerate(g.edges):
        if t == h:
            raise GraphError(f"edge {j} is a self-loop on vertex {t}")
        rows[2 * j], rows[2 * j + 1] = t, h
    return IncidenceMatrix(_store(rows, cols, vals, (g.n, m), dense_threshold), "oriented", tuple(range(m)))


def build_hypergraph_incidence(h: Hypergraph, dense_threshold: int = DENSE_NNZ_THRESHOLD) -> IncidenceMatrix:
    """Binary incidence: ``B[i, e] = 1`` iff vertex ``i`` belongs to hyperedge ``e``."""
    rows, cols = [], []
    for j, e in enumerate(h.hyperedges):
        if not e:
            raise GraphError(f"hyperedge {j} is empty")
        for v in sorted(e):
            rows.append(v)
            cols.append(j)
    vals = np.ones(len(rows))
    values = _store(np.array(rows, dtype=int), np.array(cols, dtype=int), vals, (h.n, h.m), dense_threshold)
    return IncidenceMatrix(values, "binary", tuple(range(h.m)))


def flip_orientations(b: IncidenceMatrix, subset: Iterable[int]) -> IncidenceMatrix:
    """Multiply the selected columns by -1, i.e. ``B @ D`` with ``D`` a diagonal sign matrix."""
    if b.kind != "oriented":
        raise GraphError("orientation flips are only defined for oriented incidence matrices")
    signs = np.ones(b.cols)
    for j in set(subset):
        if not 0 <= j < b.cols:
            raise GraphError(f"column {j} out of range [0, {b.cols})")
        signs[j] = -1.0
    if b.is_sparse:
        values = (b.values @ sp.diags(signs)).tocsc()
    else:
        values = b.values * signs
    return IncidenceMatrix(values, b.kind, b.column_map)


def connected_components(g: DirectedGraph) -> list[list[int]]:
    """Weakly connected components, each sorted, ordered by smallest member."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t, h in g.edges:
        rt, rh = find(t), find(h)
        if rt != rh:
            parent[max(rt, rh)] = min(rt, rh)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


def is_connected(g: DirectedGraph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def cycle_rank(g: DirectedGraph) -> int:
    """First Betti number ``m - n + c`` of the underlying undirected graph."""
    return g.m - g.n + len(connected_components(g))
