"""twindom: decide whether a graph's total domination number equals twice
its domination number.

For graphs with no induced hexagon or chorded hexagon (patterns c6, h1,
h2; all chordal graphs qualify) the question is decided in polynomial
time from the true-twin structure of closed neighborhoods, with implied
exact values and concrete certificates. Exponential exact solvers serve
as desk-scale oracles, and a sweep driver re-verifies every supporting
claim over exhaustive small-graph corpora.
"""

from .characterize import (
    ClassificationReport,
    EligibilityError,
    classify,
    classify_block_graph,
    classify_by_supports,
    classify_tree,
    gamma_set_count_from_twins,
    girth_implication_holds,
)
from .domination import (
    DominationCertificate,
    GammaSetEnumeration,
    IsolatedVertexError,
    OracleCapExceeded,
    enumerate_gamma_sets,
    exact_gamma,
    exact_gamma_total,
    is_dominating,
    is_gamma2_exact,
    is_packing,
    is_total_dominating,
)
from .forbidden import (
    C3,
    C6,
    H1,
    H2,
    Embedding,
    Pattern,
    find_induced,
    girth,
    is_chordal,
    is_free,
)
from .graphs import (
    BasicStats,
    Graph,
    GraphParseError,
    basic_stats,
    closed_neighborhood,
    closed_neighborhood_of_set,
    open_neighborhood,
    parse_graph,
    serialize_graph,
)
from .structure import (
    BlockDecomposition,
    NeighborhoodPartition,
    SpecialClasses,
    blocks_and_cut_vertices,
    is_block_graph,
    is_special,
    neighborhood_partition,
    special_classes,
    special_vertices,
    support_vertices,
)

__version__ = "0.1.0"
