"""Sign-vector and maximal-minor conditions on a pair of subspaces.

The pair is given in kernel form, ``S = ker W`` and ``St = ker Wt``, both
``d x n`` of rank ``d``. Symbolic entries are allowed in the minor-based
conditions; the sign-vector conditions need the signs they touch to be
decidable, which in practice means rational matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..errors import ParametricError, ShapeError
from ..feasibility import exists_vector, sign_box
from ..matrix import ExactMatrix, polynomial_kernel_matrix
from ..oriented_matroids import covectors_from_matrix, nonnegative_cocircuits
from ..scalars import (
    AssumptionSet,
    ConditionDisjunction,
    Constraint,
    Verdict,
    is_rational,
    normalize_constraint,
    scalar_sign,
)
from ..sign_vectors import leq
from .network import Network, kinetic_order_generators, stoichiometric_generators


@dataclass(frozen=True)
class SubspacePair:
    W: ExactMatrix
    Wt: ExactMatrix

    def __post_init__(self):
        if self.W.shape != self.Wt.shape:
            raise ShapeError(f"W is {self.W.shape} but Wt is {self.Wt.shape}")
        if self.W.is_rational() and self.W.rank() != self.W.n_rows:
            raise ShapeError(f"W has rank {self.W.rank()} < {self.W.n_rows} rows")

    @property
    def is_rational(self) -> bool:
        return self.W.is_rational() and self.Wt.is_rational()

    @property
    def variables(self) -> tuple:
        return tuple(sorted(set(self.W.variables) | set(self.Wt.variables)))

    def substitute(self, values) -> "SubspacePair":
        return SubspacePair(self.W.substitute(values), self.Wt.substitute(values))

    @classmethod
    def from_network(cls, net: Network, assumptions: AssumptionSet | None = None) -> "SubspacePair":
        """Kernel presentations of ``S = im(Y I_E)`` and ``St = im(Yt I_E)``."""
        G = stoichiometric_generators(net)
        Gt = kinetic_order_generators(net)
        W = G.transpose().kernel_matrix() if G.n_cols else ExactMatrix.identity(net.n_species)
        Wt = polynomial_kernel_matrix(Gt.transpose(), assumptions) if Gt.n_cols else ExactMatrix.identity(net.n_species)
        if W.n_rows != Wt.n_rows:
            raise ShapeError(
                f"dim S = {net.n_species - W.n_rows} differs from dim St = {net.n_species - Wt.n_rows}"
            )
        return cls(W, Wt)


def _require_rational(pair: SubspacePair, what: str):
    if not pair.is_rational:
        raise ParametricError(
            f"{what} needs rational matrices; specialize {list(pair.variables)} first"
        )


def _minor_condition(pair: SubspacePair, relation: str, assumptions: AssumptionSet | None) -> ConditionDisjunction:
    W, Wt = pair.W, pair.Wt
    d, n = W.shape
    index_sets = list(combinations(range(1, n + 1), d))
    branches = []
    for eps in (1, -1):
        constraints = set()
        # for ">=" some product must also be nonzero, otherwise the
        # orthogonal complement of St meets S in a nonzero sign vector
        witnessed = relation == ">"
        candidates = []
        alive = True
        for I in index_sets:
            m = W.minor(I)
            if m == 0:
                continue
            mt = Wt.minor(I)
            if is_rational(m):
                poly = mt * (eps if m > 0 else -eps)
                guard = None
            else:
                poly = m * mt * eps
                guard = m if relation == ">" else None
            # the assumption oracle may settle the sign outright
            s = scalar_sign(poly, assumptions)
            if s == 1:
                witnessed = True
            elif s is None and not witnessed:
                candidates.append(normalize_constraint(poly, ">"))
            if s is not None:
                if s > 0 or (s == 0 and relation == ">="):
                    continue
                if guard is None:
                    alive = False
                    break
            result = normalize_constraint(poly, relation, guard)
            if result is Verdict.NEVER:
                alive = False
                break
            if result is Verdict.ALWAYS:
                continue
            constraints.add(result)
        if not alive:
            continue
        if witnessed:
            branches.append(frozenset(constraints))
        else:
            for c in candidates:
                weaker = Constraint(c.poly, ">=")
                branches.append(frozenset({k for k in constraints if k != weaker} | {c}))
    return ConditionDisjunction(tuple(branches))


def condition_closure_minors(pair: SubspacePair, assumptions: AssumptionSet | None = None) -> ConditionDisjunction:
    """Parameter region where ``sign(S)`` lies in the closure of ``sign(St)``.

    For one orientation ``eps``, every index set with a nonzero minor of
    ``W`` contributes ``eps * det W_I * det Wt_I > 0``.
    """
    return _minor_condition(pair, ">", assumptions)


def condition_uniqueness_minors(pair: SubspacePair, assumptions: AssumptionSet | None = None) -> ConditionDisjunction:
    """Parameter region where ``sign(S)`` meets ``sign(St^perp)`` only in zero.

    For one orientation ``eps``, every product ``eps * det W_I * det Wt_I`` is
    nonnegative and at least one is positive. When no product is known to be
    positive, each candidate yields its own branch.
    """
    return _minor_condition(pair, ">=", assumptions)


def condition_closure_sign_vectors(pair: SubspacePair) -> bool:
    _require_rational(pair, "the closure sign-vector test")
    covectors_s = covectors_from_matrix(pair.W)
    covectors_st = covectors_from_matrix(pair.Wt)
    for sigma in covectors_s:
        if sigma in covectors_st:
            continue
        if not any(leq(sigma, tau) for tau in covectors_st):
            return False
    return True


def condition_uniqueness_sign_vectors(pair: SubspacePair, assumptions: AssumptionSet | None = None) -> bool:
    """No nonzero covector of ``ker W`` is realized in the row space of ``Wt``.

    Realizability is decided by the elementary-vector test, so a symbolic
    ``Wt`` works whenever the signs it needs are decidable.
    """
    for sigma in covectors_from_matrix(pair.W, assumptions=assumptions):
        if sigma.is_zero():
            continue
        if exists_vector(pair.Wt, sign_box(list(sigma)), assumptions=assumptions).feasible:
            return False
    return True


def condition_faces(pair: SubspacePair) -> bool:
    """Every nonnegative cocircuit of ``row(Wt)`` dominates one of ``row(W)``."""
    _require_rational(pair, "the face condition")
    taus = nonnegative_cocircuits(pair.W, kernel=False)
    for tau_t in nonnegative_cocircuits(pair.Wt, kernel=False):
        if not any(leq(tau, tau_t) for tau in taus):
            return False
    return True
