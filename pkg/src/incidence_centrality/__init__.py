"""Vertex, edge and hub/authority centralities from the SVD of incidence matrices."""

from .centrality import (
    CentralityReport,
    edge_centrality,
    graph_centralities,
    hub_authority,
    hypergraph_centralities,
    normalize_scores,
    vertex_centrality,
)
from .errors import (
    CentralityError,
    DisconnectedGraphError,
    GraphError,
    ParseError,
    SpectralError,
    UndefinedCorrelation,
)
from .graph import (
    DirectedGraph,
    Hypergraph,
    IncidenceMatrix,
    build_hypergraph_incidence,
    build_incidence,
    connected_components,
    cycle_rank,
    flip_orientations,
)
from .spectral import (
    RegularizationConfig,
    SpectralDecomposition,
    compact_svd,
    pseudoinverse_diagonal,
    regularize_incidence,
    truncated_svd,
)

__version__ = "0.1.0"
