"""eglocal: exact verification of vertex-localized path/cycle edge bounds.

Per-vertex weights p(v) and c(v) localize the classical path/cycle edge
bounds; this package computes them exactly on small graphs, runs the
rotation and peeling machinery behind the cycle bound, recognizes the
extremal families, and batch-verifies everything over exhaustive and
random corpora.
"""

from .analysis import (
    BoundReport,
    StructureVerdict,
    bound_report,
    check_characterizations,
    classical_recovery,
    classify_extremal,
    degree_one_core,
    edge_local_report,
    lemma_suite,
    structure_classify,
)
from .blocks import BlockDecomposition, decompose, is_parent_dominated, order_profile
from .errors import ClosureCapError, Graph6Error, SizeCapError
from .generators import (
    BlockNode,
    BlockPlan,
    SplitMix64,
    complete_graph,
    cycle_graph,
    enumerate_labeled,
    gen_block_graph,
    gen_clique_union,
    gen_gnm,
    gen_gnp,
    gen_parent_dominated,
    path_graph,
    star,
    turan,
)
from .graphs import Graph, parse_graph6, to_graph6
from .peeling import PeelTrace, equality_conditions, peel, verify_certificate
from .rotation import (
    Closure,
    VPath,
    closure,
    holes,
    is_good,
    n_plus,
    segments,
    simple_transforms,
    transforms_ending_at,
    two_branch_at,
)
from .weights import (
    EXACT_CAP,
    EdgeWeightTable,
    WeightTable,
    circumference,
    edge_weights,
    longest_path_from,
    vertex_weights,
)

__all__ = [
    "BlockDecomposition",
    "BlockNode",
    "BlockPlan",
    "BoundReport",
    "Closure",
    "ClosureCapError",
    "EXACT_CAP",
    "EdgeWeightTable",
    "Graph",
    "Graph6Error",
    "PeelTrace",
    "SizeCapError",
    "SplitMix64",
    "StructureVerdict",
    "VPath",
    "WeightTable",
    "bound_report",
    "check_characterizations",
    "circumference",
    "classical_recovery",
    "classify_extremal",
    "closure",
    "complete_graph",
    "cycle_graph",
    "decompose",
    "degree_one_core",
    "edge_local_report",
    "edge_weights",
    "enumerate_labeled",
    "equality_conditions",
    "gen_block_graph",
    "gen_clique_union",
    "gen_gnm",
    "gen_gnp",
    "gen_parent_dominated",
    "holes",
    "is_good",
    "is_parent_dominated",
    "lemma_suite",
    "longest_path_from",
    "n_plus",
    "order_profile",
    "parse_graph6",
    "path_graph",
    "peel",
    "segments",
    "simple_transforms",
    "star",
    "structure_classify",
    "to_graph6",
    "transforms_ending_at",
    "turan",
    "two_branch_at",
    "verify_certificate",
    "vertex_weights",
]
