"""Degree power sums of graphs without a path on k vertices.

Exact tools for comparing the sum of p-th powers of degrees over P_k-free
graphs: a bitset graph type with graph6 I/O, canonical labeling, an exact
longest-path oracle, the W(n, k, s) construction family, isomorph-free
enumeration, an extremal search, and a checker for the replacement
inequalities used when comparing component structures.
"""

__version__ = "0.1.0"

from .errors import (
    CapacityError,
    ConfigurationError,
    DomainError,
    Graph6Error,
    InvalidModeError,
    PathTuranError,
)
from .graph import DegreeVector, Graph, PowerParam, degree_power_sum, disjoint_union, from_graph6, to_graph6
from .canon import are_isomorphic, automorphism_orbits, canonical_form, canonical_labeling
from .paths import is_path_free, longest_path_order
from .constructions import WParams, build_w, classify_component, dp_of_w, t_of
from .enumeration import enumerate_connected_path_free, enumerate_path_free
from .search import SearchConfig, connected_max, find_n0, global_max, verify_connected_lemma
from .table import ConnectedMaxTable, load_tables, save_tables
from .claims import GridSpec, run_grid

__all__ = [
    "CapacityError", "ConfigurationError", "DomainError", "Graph6Error", "InvalidModeError", "PathTuranError",
    "DegreeVector", "Graph", "PowerParam", "degree_power_sum", "disjoint_union", "from_graph6", "to_graph6",
    "are_isomorphic", "automorphism_orbits", "canonical_form", "canonical_labeling",
    "is_path_free", "longest_path_order",
    "WParams", "build_w", "classify_component", "dp_of_w", "t_of",
    "enumerate_connected_path_free", "enumerate_path_free",
    "SearchConfig", "connected_max", "find_n0", "global_max", "verify_connected_lemma",
    "ConnectedMaxTable", "load_tables", "save_tables",
    "GridSpec", "run_grid",
]
