"""Graph construction, P3 enumeration, distances and file formats."""

from cover_energy.graph.core import (
    distance_to_set,
    distances_to_set,
    enumerate_p3,
    is_connected,
    new_graph,
    pendant_vertices,
)
from cover_energy.graph.io import (
    GraphDocument,
    LoadedGraph,
    format_edge_list,
    format_graph_json,
    load_graph,
    parse_edge_list,
    parse_graph_json,
)
from cover_energy.graph.models import (
    UNREACHABLE,
    Distance,
    Edge,
    Graph,
    Path3,
    Unreachable,
    canonical_edge,
)

__all__ = [
    "UNREACHABLE",
    "Distance",
    "Edge",
    "Graph",
    "GraphDocument",
    "LoadedGraph",
    "Path3",
    "Unreachable",
    "canonical_edge",
    "distance_to_set",
    "distances_to_set",
    "enumerate_p3",
    "format_edge_list",
    "format_graph_json",
    "is_connected",
    "load_graph",
    "new_graph",
    "parse_edge_list",
    "parse_graph_json",
    "pendant_vertices",
]
