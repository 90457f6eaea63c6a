"""Exact elementary vectors, sign vectors and oriented matroids, with
sign-vector conditions for generalized mass-action reaction networks."""

__version__ = "0.1.0"

from .elementary import ElementaryVectorList, elementary_vector_for_index_set, elementary_vectors
from .errors import (
    EmptyIntervalError,
    NetworkError,
    OmkitError,
    ParametricError,
    ScalarSyntaxError,
    ShapeError,
    UndecidableSignError,
    UnknownSymbolError,
)
from .feasibility import (
    FeasibilityResult,
    Interval,
    IntervalBox,
    exists_vector,
    exists_vector_in_kernel,
    feasibility_oracle,
    intervals_from_bounds,
    sign_box,
)
from .matrix import ExactMatrix, certified_rank
from .oriented_matroids import (
    chirotope,
    cocircuits_from_elementary_vectors,
    cocircuits_from_matrix,
    covectors_from_cocircuits,
    covectors_from_matrix,
)
from .scalars import (
    AssumptionSet,
    ConditionDisjunction,
    Constraint,
    Polynomial,
    format_scalar,
    parse_scalar,
    scalar_sign,
)
from .sign_vectors import SignVector, compose, leq, lower_closure, sign_vector_of

__all__ = [
    "AssumptionSet",
    "ConditionDisjunction",
    "Constraint",
    "ElementaryVectorList",
    "EmptyIntervalError",
    "ExactMatrix",
    "FeasibilityResult",
    "Interval",
    "IntervalBox",
    "NetworkError",
    "OmkitError",
    "ParametricError",
    "Polynomial",
    "ScalarSyntaxError",
    "ShapeError",
    "SignVector",
    "UndecidableSignError",
    "UnknownSymbolError",
    "certified_rank",
    "chirotope",
    "cocircuits_from_elementary_vectors",
    "cocircuits_from_matrix",
    "compose",
    "covectors_from_cocircuits",
    "covectors_from_matrix",
    "elementary_vector_for_index_set",
    "elementary_vectors",
    "exists_vector",
    "exists_vector_in_kernel",
    "feasibility_oracle",
    "format_scalar",
    "intervals_from_bounds",
    "leq",
    "lower_closure",
    "parse_scalar",
    "scalar_sign",
    "sign_box",
    "sign_vector_of",
]
