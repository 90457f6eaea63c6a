"""Degeneracy of a subspace pair, decided by recursion over nonnegative cocircuits.

The pair ``(S, St)`` is degenerate when some ``z`` in ``St^perp`` is constant
and positive on the supports of a family of nonnegative cocircuits of ``S``,
nonpositive elsewhere, and its support contains no support of a nonnegative
cocircuit of ``S^perp``. The search keeps ``St^perp`` restricted by equality
rows as cocircuits are consumed and asks the elementary-vector feasibility
test whether a suitable ``z`` still exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..feasibility import Interval, IntervalBox, exists_vector_in_kernel
from ..matrix import ExactMatrix
from ..oriented_matroids import covectors_from_matrix, nonnegative_cocircuits
from .conditions import SubspacePair, _require_rational

_POSITIVE = Interval(0, float("inf"), False, False)
_NONPOSITIVE = Interval(float("-inf"), 0, False, True)
_FREE = Interval(float("-inf"), float("inf"), False, False)


@dataclass
class DegeneracyState:
    remaining_cocircuits: list
    kernel_presentation: ExactMatrix
    positive_indices: frozenset
    equal_groups: tuple = ()


def _support_key(sigma) -> tuple:
    return tuple(sorted(sigma.support()))


def _equality_rows(support: tuple, n: int) -> list:
    rows = []
    for i, j in zip(support, support[1:]):
        row = [0] * n
        row[i], row[j] = 1, -1
        rows.append(row)
    return rows


class _Search:
    def __init__(self, pair: SubspacePair):
        self.n = pair.W.n_cols
        self.blocking = [frozenset(t.support()) for t in nonnegative_cocircuits(pair.W, kernel=False)]
        self.is_degenerate = False
        self.certificate = None

    def box(self, positive: frozenset, rest: Interval) -> IntervalBox:
        return IntervalBox(_POSITIVE if i in positive else rest for i in range(self.n))

    def recurse(self, state: DegeneracyState):
        C = list(state.remaining_cocircuits)
        K = state.kernel_presentation
        while C:
            pi = C.pop(0)
            supp = _support_key(pi)
            K_bar = K.stack(ExactMatrix.from_rows(_equality_rows(supp, self.n), self.n)) if len(supp) > 1 else K
            I_bar = state.positive_indices | frozenset(supp)
            groups = state.equal_groups + (supp,)
            if exists_vector_in_kernel(K_bar, self.box(I_bar, _NONPOSITIVE)):
                # candidate sign patterns: + exactly on I_bar
                for sigma in covectors_from_matrix(K_bar, kernel=True):
                    plus = frozenset(i for i in range(self.n) if sigma[i] > 0)
                    if plus != I_bar:
                        continue
                    supp_sigma = sigma.support()
                    if all(not tau <= supp_sigma for tau in self.blocking):
                        self.is_degenerate = True
                        self.certificate = (sigma, groups)
                        return
            elif exists_vector_in_kernel(K_bar, self.box(I_bar, _FREE)):
                self.recurse(DegeneracyState(list(C), K_bar, I_bar, groups))
            if self.is_degenerate:
                return


def find_degeneracy(pair: SubspacePair):
    """A certifying ``(sign vector, cocircuit supports)`` pair, or None."""
    _require_rational(pair, "the degeneracy test")
    search = _Search(pair)
    start = sorted(nonnegative_cocircuits(pair.W, kernel=True), key=_support_key)
    search.recurse(DegeneracyState(start, pair.Wt.kernel_matrix(), frozenset()))
    return search.certificate if search.is_degenerate else None


def subspaces_degenerate(pair: SubspacePair) -> bool:
    return find_degeneracy(pair) is not None


def condition_nondegenerate(pair: SubspacePair) -> bool:
    return not subspaces_degenerate(pair)
