"""Recognition and model conversion for digraphs with a min ordering.

Digraphs with a min ordering are exactly the signed-interval digraphs and
exactly the bi-arc digraphs.  This package certifies membership with a min
ordering and converts it into signed-interval, bi-arc, co-TT, interval and
orthogonal-ray models, finds obstructions for reflexive graphs, and solves
list homomorphism problems to templates with a min ordering.
"""
from .biarc import BiArcModel, biarc_from_min_ordering, is_consistent, ordering_generated, realize_biarc
from .exceptions import (
    BudgetExceededError,
    ConstructionError,
    GraphInputError,
    InvalidOrderingError,
    ModelError,
    NotBipartiteError,
    NotOneDirectionalError,
    SignedIntervalError,
)
from .graph import BipartiteDigraph, Digraph, as_bipartite_digraph, enumerate_digraphs, from_edge_list
from .homomorphism import arc_consistency, brute_force_hom, solve_list_hom
from .interval_models import (
    CoTTModel,
    SignedIntervalModel,
    ThresholdToleranceModel,
    cott_from_min_ordering,
    cott_to_signed,
    cott_to_threshold_tolerance,
    interval_model_from_min_ordering,
    min_ordering_from_signed,
    realize_cott,
    realize_signed,
    signed_from_min_ordering,
    standard_cott_lift,
    vertex_types,
)
from .matrix import BinaryMatrix, augment, find_pattern, independent_KL_free, is_KL_free, min_orderable
from .obstructions import find_asteroidal_triple, find_induced_cycle, find_invertible_pair, lekkerkerker_boland
from .ordering import (
    ALPHA,
    MinOrderViolation,
    VertexOrdering,
    enumerate_min_orderings,
    extrema,
    find_min_ordering,
    verify_min_ordering,
    verify_via_extrema,
)
from .rays import RayModel, min_ordering_from_rays, rays_from_signed, realize_rays

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "arc_consistency",
    "as_bipartite_digraph",
    "augment",
    "biarc_from_min_ordering",
    "BiArcModel",
    "BinaryMatrix",
    "BipartiteDigraph",
    "brute_force_hom",
    "BudgetExceededError",
    "ConstructionError",
    "cott_from_min_ordering",
    "cott_to_signed",
    "cott_to_threshold_tolerance",
    "CoTTModel",
    "Digraph",
    "enumerate_digraphs",
    "enumerate_min_orderings",
    "extrema",
    "find_asteroidal_triple",
    "find_induced_cycle",
    "find_invertible_pair",
    "find_min_ordering",
    "find_pattern",
    "from_edge_list",
    "GraphInputError",
    "independent_KL_free",
    "interval_model_from_min_ordering",
    "InvalidOrderingError",
    "is_consistent",
    "is_KL_free",
    "lekkerkerker_boland",
    "min_orderable",
    "min_ordering_from_rays",
    "min_ordering_from_signed",
    "MinOrderViolation",
    "ModelError",
    "NotBipartiteError",
    "NotOneDirectionalError",
    "ordering_generated",
    "RayModel",
    "rays_from_signed",
    "realize_biarc",
    "realize_cott",
    "realize_rays",
    "realize_signed",
    "signed_from_min_ordering",
    "SignedIntervalError",
    "SignedIntervalModel",
    "solve_list_hom",
    "standard_cott_lift",
    "ThresholdToleranceModel",
    "verify_min_ordering",
    "verify_via_extrema",
    "vertex_types",
    "VertexOrdering",
]
