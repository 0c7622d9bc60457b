"""Graphs, file formats, generator families and BFS distance structure."""

from .distance import (
    DistanceProfile,
    IntersectionArray,
    NotDistanceRegular,
    bfs_distances,
    distance_graph,
    distance_profile,
    intersection_array,
)
from .families import FAMILIES, generate_family, parse_family_spec
from .graph import Graph
from .io import parse_edge_list, parse_graph6, to_edge_list, to_graph6

__all__ = [
    "FAMILIES",
    "DistanceProfile",
    "Graph",
    "IntersectionArray",
    "NotDistanceRegular",
    "bfs_distances",
    "distance_graph",
    "distance_profile",
    "generate_family",
    "intersection_array",
    "parse_edge_list",
    "parse_family_spec",
    "parse_graph6",
    "to_edge_list",
    "to_graph6",
]
