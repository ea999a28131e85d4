"""Full-homomorphism order on finite graphs and small relational structures.

Cores are the point-determining graphs, gaps are exactly the one-vertex
induced extensions, and every finite target family has a finite obstruction
family.  The package provides those computations plus the exhaustive
small-n machinery used to cross-check them.
"""

from .errors import (
    CostGuardError,
    FullhomError,
    InvariantError,
    ParseError,
    UnsupportedArityError,
)
from .graphs import (
    Graph,
    Mapping,
    VertexSet,
    add_vertex,
    canonical_form,
    complete_graph,
    empty_graph,
    graph_from_canonical,
    induced_subgraph,
    is_isomorphic,
    is_point_determining,
    neighborhood,
    path_graph,
    pd_quotient,
    remove_vertex,
)
from .formats import (
    graph_to_graph6,
    graph_to_inline,
    graph_to_text,
    parse_graph6,
    parse_graph_text,
    parse_inline,
)
from .homs import (
    FullHomWitness,
    fhom_equivalent,
    find_full_hom,
    induced_embedding,
    is_f_core,
    is_full_hom,
)
from .gaps import (
    DeterminingGraph,
    GapCertificate,
    check_forest_determiners,
    core_chain,
    determines,
    determining_graph,
    determining_vertex,
    gap_extensions,
    is_gap,
    removable_vertices,
)
from .dualities import DualityPair, check_duality, duality_frontier, lower_set
from .enumeration import (
    IsoClassCatalog,
    brute_force_full_hom,
    catalog_export,
    enumerate_graphs,
    enumerate_pd_graphs,
    enumerate_pd_rel_structures,
    enumerate_rel_structures,
)
from .relstruct import (
    DIGRAPH_LANGUAGE,
    Language,
    MARK,
    RelGapCertificate,
    RelStructure,
    graph_as_structure,
    has_loop,
    mark_tuple,
    parse_structure_json,
    rel_canonical_form,
    rel_find_full_hom,
    rel_induced_embedding,
    rel_induced_substructure,
    rel_is_full_hom,
    rel_is_gap,
    rel_is_isomorphic,
    rel_is_point_determining,
    rel_neighborhood,
    rel_pd_quotient,
    structure_as_graph,
    structure_to_json,
    ternary_counterexample,
)

__version__ = "0.1.0"
