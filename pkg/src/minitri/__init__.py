"""Simplicial complex toolkit.

Facet-list complexes with exact integer homology, edge-path fundamental
group analysis, vertex-count lower bounds for manifold triangulations,
and combinatoriality certificates driven by link size and homology.
"""

from .bounds import (
    BoundReport,
    analyze,
    cat_vertex_bound,
    ct_lower_bound_from_hdim,
    homology_sphere_verdict,
    nonfree_pi1_bound,
    simply_connected_bound,
    sphere_recognition_threshold,
    wedge_covering_type,
)
from .combinatorial import (
    BistellarMove,
    BistellarResult,
    CombinatorialityCertificate,
    LevelSummary,
    apply_bistellar_move,
    bistellar_moves,
    bistellar_sphere_heuristic,
    certified_sphere,
    recognize_2sphere,
    recognize_circle,
    small_link_certificate,
)
from .complexes import PseudomanifoldReport, SimplicialComplex, from_facets
from .errors import (
    CoefficientError,
    ComplexError,
    ConnectivityError,
    DimensionError,
    FacetInputError,
    FixtureError,
    HypothesisError,
    MissingSimplexError,
    NotPseudomanifoldError,
    VertexSetError,
)
from .facetio import dump, dumps, load, load_assertions, loads, parse_assertions
from .fixtures import fixture, fixture_names
from .homology import (
    HomologyProfile,
    boundary_matrix,
    cohomology,
    euler_characteristic,
    homology,
    is_homology_sphere,
)
from .pi1 import (
    AbelianInvariants,
    FreenessVerdict,
    GroupPresentation,
    abelianization,
    edge_path_presentation,
    find_symmetric_quotient,
    freeness_verdict,
    tietze_simplify,
    validate_not_free_certificate,
)
from .snf import SNFResult, rank_mod_p, smith_normal_form
from .verify import (
    CheckReport,
    GroupComparison,
    LinkSphereCheck,
    alexander_duality_check,
    complement_homology_check,
    local_homology_check,
    local_homology_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianInvariants",
    "BistellarMove",
    "BistellarResult",
    "BoundReport",
    "CheckReport",
    "CoefficientError",
    "CombinatorialityCertificate",
    "ComplexError",
    "ConnectivityError",
    "DimensionError",
    "FacetInputError",
    "FixtureError",
    "FreenessVerdict",
    "GroupComparison",
    "GroupPresentation",
    "HomologyProfile",
    "HypothesisError",
    "LevelSummary",
    "LinkSphereCheck",
    "MissingSimplexError",
    "NotPseudomanifoldError",
    "PseudomanifoldReport",
    "SNFResult",
    "SimplicialComplex",
    "VertexSetError",
    "abelianization",
    "alexander_duality_check",
    "analyze",
    "apply_bistellar_move",
    "bistellar_moves",
    "bistellar_sphere_heuristic",
    "boundary_matrix",
    "cat_vertex_bound",
    "certified_sphere",
    "cohomology",
    "complement_homology_check",
    "ct_lower_bound_from_hdim",
    "dump",
    "dumps",
    "edge_path_presentation",
    "euler_characteristic",
    "find_symmetric_quotient",
    "fixture",
    "fixture_names",
    "freeness_verdict",
    "from_facets",
    "homology",
    "homology_sphere_verdict",
    "is_homology_sphere",
    "load",
    "load_assertions",
    "loads",
    "local_homology_check",
    "local_homology_sweep",
    "nonfree_pi1_bound",
    "parse_assertions",
    "rank_mod_p",
    "recognize_2sphere",
    "recognize_circle",
    "simply_connected_bound",
    "small_link_certificate",
    "smith_normal_form",
    "sphere_recognition_threshold",
    "tietze_simplify",
    "validate_not_free_certificate",
    "wedge_covering_type",
]
