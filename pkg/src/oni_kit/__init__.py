"""Exact combinatorics of open neighborhood ideals.

Sperner-family dualization, square-free monomial ideals, simplicial
complexes with vertex-decomposability certificates, balanced-tree
domination theory, and geometric vertex decomposition, all over exact
bitmask arithmetic with canonical JSON encodings.
"""

from .complexes import (
    EMPTY,
    FOREST_FACET_CAP,
    ORDINARY,
    VOID,
    Leaf,
    Shed,
    SimplicialComplex,
    cycle_order,
    deletion,
    facet_ideal,
    find_leaf,
    is_connected_complex,
    is_cycle,
    is_shedding_vertex,
    is_simplicial_forest,
    is_simplicial_tree,
    is_unmixed_complex,
    is_vertex_decomposable,
    join,
    link,
    minimal_vertex_covers,
    shedding_certificate_from_json,
    shedding_certificate_to_json,
    stanley_reisner_complex,
    stanley_reisner_ideal,
    validate_shedding_certificate,
)
from .errors import CapExceeded, InputError
from .fixtures import beg_a, fixture_document, fixture_names, p6, t_a, twin_broom
from .graphs import (
    DECOMPOSITION_VERTEX_CAP,
    Graph,
    HeightProfile,
    TreeDecomposition,
    edge_join,
    even_stable_complex,
    find_split_vertex,
    heights,
    induced_odd_oni,
    is_chordal,
    is_structurally_td_unmixed,
    is_td_unmixed,
    is_td_unmixed_balanced_forest,
    minimal_odd_td_sets,
    minimal_td_sets,
    o_extend,
    o_sequence,
    odd_oni,
    oni,
    path_graph,
    realize_as_oni,
    search_decomposition,
    stable_complex,
    verify_decomposition,
)
from .gvd import (
    BASE_UNIT,
    BASE_VARIABLES,
    BASE_ZERO,
    Base,
    Split,
    certificate_from_json_obj,
    certificate_to_json_obj,
    certify_tree_gvd,
    is_gvd,
    is_valid_geometric_decomposition,
    split,
    validate_certificate,
)
from .ideals import SquareFreeIdeal
from .universe import (
    BRUTE_FORCE_SUPPORT_CAP,
    SpernerFamily,
    Universe,
    VertexSet,
    brute_force_transversals,
    is_sperner,
    minimal_transversals,
    minimize_family,
)
from .verify import run_verification

__version__ = "0.1.0"

__all__ = [
    "BASE_UNIT",
    "BASE_VARIABLES",
    "BASE_ZERO",
    "BRUTE_FORCE_SUPPORT_CAP",
    "Base",
    "CapExceeded",
    "DECOMPOSITION_VERTEX_CAP",
    "EMPTY",
    "FOREST_FACET_CAP",
    "Graph",
    "HeightProfile",
    "InputError",
    "Leaf",
    "ORDINARY",
    "Shed",
    "SimplicialComplex",
    "SpernerFamily",
    "Split",
    "SquareFreeIdeal",
    "TreeDecomposition",
    "Universe",
    "VOID",
    "VertexSet",
    "beg_a",
    "brute_force_transversals",
    "certificate_from_json_obj",
    "certificate_to_json_obj",
    "certify_tree_gvd",
    "cycle_order",
    "deletion",
    "edge_join",
    "even_stable_complex",
    "facet_ideal",
    "find_leaf",
    "find_split_vertex",
    "fixture_document",
    "fixture_names",
    "heights",
    "induced_odd_oni",
    "is_chordal",
    "is_connected_complex",
    "is_cycle",
    "is_gvd",
    "is_shedding_vertex",
    "is_simplicial_forest",
    "is_simplicial_tree",
    "is_sperner",
    "is_structurally_td_unmixed",
    "is_td_unmixed",
    "is_td_unmixed_balanced_forest",
    "is_unmixed_complex",
    "is_valid_geometric_decomposition",
    "is_vertex_decomposable",
    "join",
    "link",
    "minimal_odd_td_sets",
    "minimal_td_sets",
    "minimal_transversals",
    "minimal_vertex_covers",
    "minimize_family",
    "o_extend",
    "o_sequence",
    "odd_oni",
    "oni",
    "p6",
    "path_graph",
    "realize_as_oni",
    "run_verification",
    "search_decomposition",
    "shedding_certificate_from_json",
    "shedding_certificate_to_json",
    "split",
    "stable_complex",
    "stanley_reisner_complex",
    "stanley_reisner_ideal",
    "t_a",
    "twin_broom",
    "validate_certificate",
    "validate_shedding_certificate",
    "verify_decomposition",
]
