"""Maximal induced matchings: enumeration, counting, maximisation, and bound checks."""

from .enumeration import (
    EnumerationStream,
    LineGraphMap,
    count_mim,
    count_mis,
    enumerate_mim_cameron,
    enumerate_mis,
    graph_square,
    line_graph,
    maximum_induced_matching,
)
from .generators import exhaustive_graphs, generate, random_graph
from .graph import (
    Graph,
    TwinPartition,
    VertexSet,
    closed_neighborhood,
    delete_vertices,
    is_triangle_free,
    open_neighborhood,
    twin_partition,
)
from .graph6 import Graph6Error, from_graph6, to_graph6
from .matchings import (
    ConstraintPair,
    Matching,
    count_mim_constrained,
    count_mim_oracle,
    enumerate_mim_oracle,
    is_induced_matching,
    is_maximal_induced_matching,
    partition_by_pair,
)
from .transforms import (
    RetargetResult,
    check_lemma2,
    check_lemma3,
    check_lemma4,
    check_lemma5,
    retarget_twin_set,
    retarget_vertex,
)
from .verification import (
    BoundReport,
    characterize_extremal_n6,
    check_lemma6,
    verify_bound,
    verify_extremal_family,
)

__version__ = "0.1.0"
