"""Edge ideals of weighted oriented graphs.

Builds the irreducible decomposition of I(D) from the strong vertex covers of
D, reads off the associated primes, and decides unmixedness by the cover
criteria or, for whiskers, bipartite graphs and cycles, by closed forms.  A
brute-force splitting oracle on monomial ideals checks the combinatorics.
"""

from .covers import (
    CoverAnalysis,
    UnicycleBlock,
    UnicyclePartition,
    enumerate_minimal_covers,
    enumerate_strong_covers,
    is_minimal_cover,
    is_strong_cover,
    is_unicycle_oriented,
    is_vertex_cover,
    l_partition,
    unicycle_partition,
)
from .decomposition import (
    DecompositionReport,
    associated_primes,
    edge_ideal,
    irreducible_ideal_of_cover,
    strong_cover_decomposition,
    verify_decomposition,
)
from .errors import *  # noqa: F401,F403
from .graph import (
    WeightedOrientedGraph,
    build_graph,
    c_minor,
    classify_shape,
    connected_components,
    disjoint_union,
    neighborhoods,
    underlying_graph,
)
from .monomials import (
    IrreducibleIdeal,
    MonomialIdeal,
    intersect,
    intersect_all,
    irreducible_decomposition_oracle,
)
from .unmixed import (
    CharacterizationResult,
    UnmixedReport,
    characterize,
    characterize_bipartite,
    characterize_cycle,
    characterize_whisker,
    check_c_minor_closure,
    cm_complete,
    cm_path,
    cm_report,
    has_minimal_strong_property,
    is_unmixed,
    unmixed_by_components,
)

__version__ = "0.1.0"
