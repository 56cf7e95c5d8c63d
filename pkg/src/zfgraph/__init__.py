"""Exact zero forcing numbers of small graphs and their complements."""

from __future__ import annotations

from ._backend import BACKEND
from .forcing import (
    ForcingTrace,
    ZResult,
    closure,
    cut_vertex_bound,
    is_zero_forcing_set,
    propagation_rounds,
    zero_forcing_number,
)
from .graph import (
    Graph,
    GraphError,
    VertexSet,
    canonical_form,
    complement,
    emit_graph6,
    from_edge_list,
    parse_graph6,
)
from .pathcover import path_cover_number, path_cover_number_tree
from .structure import classify

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ForcingTrace",
    "Graph",
    "GraphError",
    "VertexSet",
    "ZResult",
    "canonical_form",
    "classify",
    "closure",
    "complement",
    "cut_vertex_bound",
    "emit_graph6",
    "from_edge_list",
    "is_zero_forcing_set",
    "parse_graph6",
    "path_cover_number",
    "path_cover_number_tree",
    "propagation_rounds",
    "zero_forcing_number",
]
