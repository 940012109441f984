"""Visibility graphs from ordered sequences.

Three interchangeable constructions (exhaustive pairwise, divide and
conquer, and a mergeable maximum-BST codec) for horizontal and natural
visibility graphs, plus deterministic series generators and a benchmark
harness.
"""

from .codec import (
    BstNode,
    CheckCounter,
    HeapViolationError,
    MaxBst,
    add_point,
    decode_hvg,
    decode_nvg,
    encode,
    merge,
    per_node_residual_count,
    residual_check_formula_balanced,
    trees_equal,
    write_tree_snapshot,
)
from .core import (
    Criterion,
    DuplicateIndexError,
    Point,
    TimeSeries,
    VisibilityGraph,
    graph_equal,
    read_edge_list,
    read_series,
    visible_hv,
    visible_nv,
    write_edge_list,
    write_series,
)
from .generators import (
    RNG_ID,
    InvalidSpecError,
    SeriesKind,
    SeriesSpec,
    balanced_tree_values,
    conway_sequence,
    generate,
)
from .reference import AlgorithmId, basic_hvg, basic_nvg, dc_build
from .bench import build_graph, run_bench, run_online_bench

__version__ = "0.1.0"

__all__ = [
    "AlgorithmId",
    "BstNode",
    "CheckCounter",
    "Criterion",
    "DuplicateIndexError",
    "HeapViolationError",
    "InvalidSpecError",
    "MaxBst",
    "Point",
    "RNG_ID",
    "SeriesKind",
    "SeriesSpec",
    "TimeSeries",
    "VisibilityGraph",
    "add_point",
    "balanced_tree_values",
    "basic_hvg",
    "basic_nvg",
    "build_graph",
    "conway_sequence",
    "dc_build",
    "decode_hvg",
    "decode_nvg",
    "encode",
    "generate",
    "graph_equal",
    "merge",
    "per_node_residual_count",
    "read_edge_list",
    "read_series",
    "residual_check_formula_balanced",
    "run_bench",
    "run_online_bench",
    "trees_equal",
    "visible_hv",
    "visible_nv",
    "write_edge_list",
    "write_series",
    "write_tree_snapshot",
]
