"""Induced-path search and induced-saturation verification."""

import json

from ._pathsat import (
    FormatError,
    Graph,
    GraphError,
    SymmetryError,
    __version__,
    automorphism_ok,
    brute_force_longest,
    canonical_long_path,
    from_edges,
    from_graph6,
    graph,
    is_induced_path,
    vertex_orbit_count,
)
from . import _pathsat as _core


def longest_induced_path(ref, symmetry=True, budget_nodes=0, budget_seconds=0.0, jobs=1):
    """Longest induced path of a referenced graph, as a dict."""
    return json.loads(_core.longest_induced_path_json(ref, symmetry, budget_nodes, budget_seconds, jobs))


def has_induced_path(g, k, budget_nodes=0, budget_seconds=0.0):
    return json.loads(_core.has_induced_path_json(g, k, budget_nodes, budget_seconds))


def check(ref_or_graph, k, symmetry=False, budget_nodes=0, budget_seconds=0.0, jobs=1):
    """Saturation report for a graph reference string or a Graph."""
    if isinstance(ref_or_graph, Graph):
        return json.loads(_core.check_graph_json(ref_or_graph, k))
    return json.loads(_core.check_json(ref_or_graph, k, symmetry, budget_nodes, budget_seconds, jobs))


def run_claims(tier="core", jobs=1):
    return json.loads(_core.run_claims_json(tier, jobs))


__all__ = [
    "FormatError",
    "Graph",
    "GraphError",
    "SymmetryError",
    "__version__",
    "automorphism_ok",
    "brute_force_longest",
    "canonical_long_path",
    "check",
    "from_edges",
    "from_graph6",
    "graph",
    "has_induced_path",
    "is_induced_path",
    "longest_induced_path",
    "run_claims",
    "vertex_orbit_count",
]
