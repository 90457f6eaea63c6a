"""scikit-learn style wrappers.

The underlying computations are exact and combinatorial, so "fit" means
"compute the structure of a subspace" and "predict" answers membership or
feasibility questions about it. Inputs go through the checks in
``_validation``; nothing here is numerical.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_box, check_exact_matrix, check_sign_vector
from .crn import (
    SubspacePair,
    check_robust_existence,
    check_unique_existence,
    condition_closure_minors,
    condition_uniqueness_minors,
)
from .elementary import elementary_vectors
from .feasibility import FeasibilityResult, exists_vector
from .oriented_matroids import chirotope, cocircuits_from_matrix, covectors_from_cocircuits
from .scalars import AssumptionSet
from .sign_vectors import sign_vector_of, sorted_signs


def _assumptions(names) -> AssumptionSet:
    return AssumptionSet(tuple(names or ()))


class ElementaryVectors(TransformerMixin, BaseEstimator):
    """Matrix -> its elementary vectors (kernel, or row space with ``kernel=False``)."""

    def __init__(self, kernel: bool = True, dedup: bool = True):
        self.kernel = kernel
        self.dedup = dedup

    def fit(self, X, y=None):
        M = check_exact_matrix(X)
        result = elementary_vectors(M, kernel=self.kernel, dedup=self.dedup)
        self.n_features_in_ = M.n_cols
        self.vectors_ = list(result)
        self.source_sets_ = list(result.source_sets)
        return self

    def transform(self, X):
        check_is_fitted(self, "vectors_")
        M = check_exact_matrix(X)
        return list(elementary_vectors(M, kernel=self.kernel, dedup=self.dedup))


class SignVectorizer(TransformerMixin, BaseEstimator):
    """Vectors -> sign vectors. Stateless apart from the expected length."""

    def __init__(self, assume_positive=()):
        self.assume_positive = assume_positive

    def fit(self, X, y=None):
        X = list(X)
        self.n_features_in_ = len(X[0]) if X else 0
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        assumptions = _assumptions(self.assume_positive)
        out = []
        for v in X:
            v = list(v)
            if len(v) != self.n_features_in_:
                raise ValueError(f"vector of length {len(v)}, expected {self.n_features_in_}")
            out.append(sign_vector_of(check_exact_matrix([v]).row(0), assumptions))
        return out


class OrientedMatroid(BaseEstimator):
    """Oriented matroid of ``ker M`` (default) or of the row space of ``M``.

    After ``fit``: ``cocircuits_``, ``covectors_`` (sorted lists) and
    ``chirotope_`` (signs of the maximal minors of the presenting matrix).
    ``predict`` tells whether each given sign vector is a covector.
    """

    def __init__(self, kernel: bool = True, assume_positive=()):
        self.kernel = kernel
        self.assume_positive = assume_positive

    def fit(self, X, y=None):
        M = check_exact_matrix(X)
        assumptions = _assumptions(self.assume_positive)
        cocircuits = cocircuits_from_matrix(M, self.kernel, assumptions)
        self.n_features_in_ = M.n_cols
        self.cocircuits_ = sorted_signs(cocircuits)
        self.covectors_ = sorted_signs(covectors_from_cocircuits(cocircuits, M.n_cols))
        self.chirotope_ = chirotope(M, assumptions)
        self._covector_set = frozenset(self.covectors_)
        return self

    def predict(self, X):
        check_is_fitted(self, "covectors_")
        return [check_sign_vector(s, self.n_features_in_) in self._covector_set for s in X]


class SubspaceFeasibility(BaseEstimator):
    """Does the row space of ``M`` meet a box? One answer per box."""

    def fit(self, X, y=None):
        self.matrix_ = check_exact_matrix(X)
        self.n_features_in_ = self.matrix_.n_cols
        return self

    def predict(self, X):
        check_is_fitted(self, "matrix_")
        return [exists_vector(self.matrix_, check_box(b, self.n_features_in_)).feasible for b in X]

    def certify(self, box) -> FeasibilityResult:
        """Result with a witness point or an elementary-vector certificate."""
        check_is_fitted(self, "matrix_")
        return exists_vector(self.matrix_, check_box(box, self.n_features_in_), want_witness=True)


class SignVectorConditions(BaseEstimator):
    """Sign-vector conditions for ``S = ker W`` and ``St = ker Wt``.

    ``fit(W, Wt)`` fills ``closure_region_`` and ``uniqueness_region_`` from
    maximal minors, plus ``robust_report_`` and ``unique_report_``. Rational
    pairs get exact verdicts in the reports; parametric pairs get regions.
    """

    def __init__(self, assume_positive=()):
        self.assume_positive = assume_positive

    def fit(self, X, y):
        pair = SubspacePair(check_exact_matrix(X), check_exact_matrix(y))
        assumptions = _assumptions(self.assume_positive)
        self.n_features_in_ = pair.W.n_cols
        self.pair_ = pair
        self.closure_region_ = condition_closure_minors(pair, assumptions)
        self.uniqueness_region_ = condition_uniqueness_minors(pair, assumptions)
        self.robust_report_ = check_robust_existence(pair, assumptions)
        self.unique_report_ = check_unique_existence(pair, assumptions)
        return self

    def predict(self, X=None):
        """``(robust existence, unique existence)`` verdicts; None when parametric."""
        check_is_fitted(self, "pair_")
        return self.robust_report_.holds, self.unique_report_.holds
