"""Exact Tait-coloring counts for planar triangulations over GF(3).

Three independent counting routes (face-sign enumeration with exact
rational weights, edge-coloring backtracking, and Heawood spin
enumeration) plus the linear-algebra and Gaussian-sum machinery needed to
cross-validate every step.
"""

from .alphasum import (
    ContractionWitness,
    ExactWeight,
    TaitAlphaResult,
    alpha_from_mask,
    contraction_witness,
    edge_weights_from_alpha,
    tait0_alpha,
    term_weight,
)
from .budgets import DEFAULT_BUDGETS, BudgetError, Budgets
from .gf3 import (
    OrientedIncidence,
    PivotCertificate,
    SymF3Matrix,
    f3,
    laplacian,
    legendre,
    oriented_incidence,
    principal_minor_det,
    sym_rank_certificate,
)
from .oracles import (
    CyclotomicInt,
    check_congruence_invariance,
    check_gau_closed_form,
    check_gau_identity,
    check_minor_choice_independence,
    check_minor_tree_sum,
    check_odd_rank_cancellation,
    check_wstar_minimality,
    gau_closed_form,
    gau_exact,
    heawood_count,
    spanning_tree_sum,
    tait_brute,
)
from .triangulation import (
    ContractedMultigraph,
    Face,
    Triangulation,
    TriangulationError,
    contract,
    edge_face_incidence,
    from_rotation,
    generate,
    parse_rotation_system,
    to_rotation_text,
)

__version__ = "0.1.0"
