"""kconn: connectivity classes, graph operations, and a verification harness."""

from .core import (Edge, Graph, GraphError, add_edge, build_graph,
                   contract_edge, delete_edge, delete_vertex,
                   induced_subgraph, is_connected, neighborhood)
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .canon import are_isomorphic, canonical_form, canonical_key

__all__ = [
    "Edge", "Graph", "GraphError", "Graph6Error",
    "add_edge", "build_graph", "contract_edge", "delete_edge",
    "delete_vertex", "induced_subgraph", "is_connected", "neighborhood",
    "decode_graph6", "encode_graph6",
    "are_isomorphic", "canonical_form", "canonical_key",
]
