"""stacktri: plane graph toolkit for completing planar partial 3-trees
into stacked plane 3-trees with verifiable witnesses.

The central entry point is :func:`complete`, which takes a plane drawing
of any partial 3-tree and returns a spanning stacked triangulation whose
drawing extends the input, together with the added edges, a perfect
elimination scheme, and a face provenance map.  Everything that feeds or
checks it is exported here: recognition (`reduce_tw3`, the exact
oracles), embedding (`embed_planar`), drawing plumbing (`PlaneGraph`
and friends), generation, serialization, and rendering.
"""

from __future__ import annotations

from .completer import Completion, case_counts, complete, reset_case_counts
from .embed import biconnected_blocks, embed_planar, is_planar
from .formats import parse_edge_list, parse_plane, serialize_plane
from .gen import SplitMix64, enum_graphs, gen_plane_3tree, subsample_plane
from .graph import Edge, Graph, norm_edge
from .ktree import (
    Pes,
    Unstackable,
    is_stacked_plane_3tree,
    reroot_pes,
    verify_pes,
)
from .plane import (
    Face,
    PlaneGraph,
    delete_edges_plane,
    extends,
    induced_plane,
    insert_edge_plane,
    relabel_plane,
    stack_vertex,
    trace_walks,
    triangle_plane,
)
from .render import audit_crossings, render_svg, tutte_layout
from .tw3 import (
    FillCompletion,
    ReductionTrace,
    Reject,
    brute_treewidth,
    reduce_tw3,
    three_tree_completion,
    treewidth_le3_oracle,
    treewidth_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "Completion",
    "Edge",
    "Face",
    "FillCompletion",
    "Graph",
    "Pes",
    "PlaneGraph",
    "ReductionTrace",
    "Reject",
    "SplitMix64",
    "Unstackable",
    "audit_crossings",
    "biconnected_blocks",
    "brute_treewidth",
    "case_counts",
    "complete",
    "delete_edges_plane",
    "embed_planar",
    "enum_graphs",
    "extends",
    "gen_plane_3tree",
    "induced_plane",
    "insert_edge_plane",
    "is_planar",
    "is_stacked_plane_3tree",
    "norm_edge",
    "parse_edge_list",
    "parse_plane",
    "reroot_pes",
    "relabel_plane",
    "render_svg",
    "reduce_tw3",
    "reset_case_counts",
    "serialize_plane",
    "stack_vertex",
    "subsample_plane",
    "three_tree_completion",
    "trace_walks",
    "treewidth_le3_oracle",
    "treewidth_oracle",
    "triangle_plane",
    "tutte_layout",
    "verify_pes",
    "__version__",
]
