"""Exact crystal combinatorics and character calculus over the cyclic datum.

The package computes highest weight crystal graphs in two partition models,
their unfoldings into a cycle crystal tensored with a neighboring highest
weight crystal, and the graded character identities that mirror those graphs
on the algebra side.
"""

from .cartan import (
    CorootWeight,
    InvalidDatumError,
    RootVector,
    cartan_entry,
    check_ell,
    coroot_evals,
    gamma,
    pair_coroot,
    symmetric_form,
)
from .crystal_core import (
    Crystal,
    CrystalGraph,
    GraphEdge,
    GraphNode,
    MorphismReport,
    TensorCrystal,
    Violation,
    bfs_levels,
    bfs_nodes,
    build_graph,
    check_axioms,
    check_morphism,
    export_graph,
    graph_from_json,
    tensor_e,
    tensor_f,
    tensor_stats,
)
from .highest_weight import (
    HWCrystal,
    MODELS,
    StatsPair,
    box_residue,
    check_partition,
    eps_vee,
    hw_crystal,
    is_regular,
    is_restricted,
    jump_stat,
    nu_of,
    phcyc_stat,
    phi_peel,
    phi_unpeel,
    phiop_peel,
    phiop_unpeel,
    transpose,
)
from .klr_char import (
    Character,
    LaurentPoly,
    ShufflePattern,
    char_Lin,
    char_equal_up_to_monomial,
    char_sign,
    char_trivial,
    coset_shuffles,
    e_op,
    eps_from_char,
    onedim_classify,
    onedim_families,
    qfact,
    qint,
    qshuffle,
    serre_defect,
    shuffle_degree,
    unit_char,
)
from .perfect_crystals import B11Crystal, BoppCrystal, b11, bopp
from .verify import (
    Report,
    partitions_of,
    verify_axioms,
    verify_case_split,
    verify_counts,
    verify_iso,
    verify_serre,
    verify_trivial_family,
)

__version__ = "0.1.0"

__all__ = [
    "B11Crystal",
    "BoppCrystal",
    "Character",
    "CorootWeight",
    "Crystal",
    "CrystalGraph",
    "GraphEdge",
    "GraphNode",
    "HWCrystal",
    "InvalidDatumError",
    "LaurentPoly",
    "MODELS",
    "MorphismReport",
    "Report",
    "RootVector",
    "ShufflePattern",
    "StatsPair",
    "TensorCrystal",
    "Violation",
    "b11",
    "bfs_levels",
    "bfs_nodes",
    "bopp",
    "box_residue",
    "build_graph",
    "cartan_entry",
    "char_Lin",
    "char_equal_up_to_monomial",
    "char_sign",
    "char_trivial",
    "check_axioms",
    "check_ell",
    "check_morphism",
    "check_partition",
    "coroot_evals",
    "coset_shuffles",
    "e_op",
    "eps_from_char",
    "eps_vee",
    "export_graph",
    "gamma",
    "graph_from_json",
    "hw_crystal",
    "is_regular",
    "is_restricted",
    "jump_stat",
    "nu_of",
    "onedim_classify",
    "onedim_families",
    "pair_coroot",
    "partitions_of",
    "phcyc_stat",
    "phi_peel",
    "phi_unpeel",
    "phiop_peel",
    "phiop_unpeel",
    "qfact",
    "qint",
    "qshuffle",
    "serre_defect",
    "shuffle_degree",
    "symmetric_form",
    "tensor_e",
    "tensor_f",
    "tensor_stats",
    "transpose",
    "unit_char",
    "verify_axioms",
    "verify_case_split",
    "verify_counts",
    "verify_iso",
    "verify_serre",
    "verify_trivial_family",
]
