"""Exact chorded-cycle packing, extremal families, and exhaustive verification.

The library decides whether a graph contains k vertex-disjoint chorded cycles
(optionally plus r additional plain cycles), generates and recognizes the two
edge-maximal families with no such packing under the standard degree-sum
hypothesis, and machine-checks the resulting trichotomy over enumerated or
streamed graph inputs.
"""

from .errors import ChordpackError
from .graph import (
    Graph,
    complement,
    degree_summary,
    from_edge_list,
    independence_number,
    induced,
    isomorphic,
    multipartite_profile,
    parse_edgelist,
    parse_graph6,
    sigma2,
    to_graph6,
)
from .cycles import (
    ChordedCycleCert,
    PathCert,
    chord_count,
    contains_chorded_cycle,
    find_chorded_cycle,
    hamiltonian_cycle,
    longest_path,
    spanning_chorded_cycle,
    verify_chorded_cycle,
)
from .packing import (
    SolveBudget,
    SolveResult,
    PackingCert,
    min_vertex_collection,
    min_vertex_collections,
    pack_chorded,
    pack_mixed,
    verify_packing,
)
from .extremal import (
    ExtremalTag,
    complete_multipartite,
    edge_maximality_check,
    gen_g1,
    gen_g2,
    recognize,
)
from .smallgraphs import canonical_graphs
from .prooflab import (
    ALL_LEMMAS,
    CollectionState,
    audit_all,
    audit_lemma,
    offpath_census,
    optimal_collection,
    remainder_profile,
)
from .verify import (
    EnumerationCensus,
    VerificationReport,
    check_corollaries,
    enumerate_verify,
    stream_verify,
    verify_instance,
)

__version__ = "0.1.0"
