"""Reaction networks with generalized mass-action kinetics."""

from .conditions import (
    SubspacePair,
    condition_closure_minors,
    condition_closure_sign_vectors,
    condition_faces,
    condition_uniqueness_minors,
    condition_uniqueness_sign_vectors,
)
from .degeneracy import condition_nondegenerate, find_degeneracy, subspaces_degenerate
from .network import (
    Deficiencies,
    Network,
    deficiency,
    incidence_matrix,
    is_weakly_reversible,
    kinetic_order_generators,
    laplacian,
    ode_rhs,
    source_matrix,
    stoichiometric_generators,
)
from .reports import ConditionResult, ExistenceReport, check_robust_existence, check_unique_existence

__all__ = [
    "ConditionResult",
    "Deficiencies",
    "ExistenceReport",
    "Network",
    "SubspacePair",
    "check_robust_existence",
    "check_unique_existence",
    "condition_closure_minors",
    "condition_closure_sign_vectors",
    "condition_faces",
    "condition_nondegenerate",
    "condition_uniqueness_minors",
    "condition_uniqueness_sign_vectors",
    "deficiency",
    "find_degeneracy",
    "incidence_matrix",
    "is_weakly_reversible",
    "kinetic_order_generators",
    "laplacian",
    "ode_rhs",
    "source_matrix",
    "stoichiometric_generators",
    "subspaces_degenerate",
]
